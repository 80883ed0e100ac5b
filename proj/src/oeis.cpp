#include "catalan_lab/oeis.hpp"

#include <map>
#include <sstream>

#include "catalan_lab/errors.hpp"
#include "catalan_lab/formulas.hpp"

namespace catalan_lab {

const std::vector<OeisBinding>& builtin_bindings() {
  static const std::vector<OeisBinding> bindings{
      {"A057552", StatId(StatKind::SymPeak), 3, 0},
      {"A051924", StatId(StatKind::RunsDesc), 1, 1},
      {"A000984", StatId(StatKind::RunsWeakAsc), 1, 0},
      {"A002054", StatId(StatKind::CornerHU), 2, 1},
      {"A002694", StatId(StatKind::CornerDH), 3, 2},
      {"A097613", StatId(StatKind::Semi), 1, 1},
      {"A000346", StatId(StatKind::Area), 1, 0},
  };
  return bindings;
}

const OeisBinding& find_binding(std::string_view id) {
  for (const auto& b : builtin_bindings()) {
    if (b.id == id) return b;
  }
  throw DomainError("no built-in binding for '" + std::string(id) + "'");
}

std::optional<OeisBinding> binding_for(const StatId& stat) {
  for (const auto& b : builtin_bindings()) {
    if (b.stat == stat) return b;
  }
  return std::nullopt;
}

std::vector<BfileTerm> oeis_terms(const OeisBinding& b, int terms, OeisIndexing indexing) {
  if (terms < 1) throw DomainError("oeis: terms must be at least 1");
  if (b.offset < 1) throw DomainError("oeis: offset must be at least 1");
  std::vector<BfileTerm> out;
  out.reserve(static_cast<std::size_t>(terms));
  const long shift = indexing == OeisIndexing::Oeis ? b.oeis_offset - b.offset : 0;
  for (int i = 0; i < terms; ++i) {
    const int n = b.offset + i;
    out.push_back({n + shift, closed_total(n, b.stat)});
  }
  return out;
}

void write_bfile(std::ostream& os, const std::vector<BfileTerm>& terms) {
  for (const auto& t : terms) os << t.index << ' ' << t.value << '\n';
}

std::vector<BfileTerm> read_bfile(std::istream& is) {
  std::vector<BfileTerm> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long index;
    std::string value;
    std::string rest;
    if (!(ls >> index >> value) || (ls >> rest)) {
      throw DomainError("b-file line " + std::to_string(line_no) + ": expected 'index value'");
    }
    Count v;
    if (v.set_str(value, 10) != 0) {
      throw DomainError("b-file line " + std::to_string(line_no) + ": bad value '" + value + "'");
    }
    out.push_back({index, v});
  }
  return out;
}

BfileComparison compare_bfile(const std::vector<BfileTerm>& ours,
                              const std::vector<BfileTerm>& theirs, long index_shift) {
  std::map<long, Count> by_index;
  for (const auto& t : theirs) by_index.emplace(t.index + index_shift, t.value);
  BfileComparison c;
  for (const auto& t : ours) {
    const auto it = by_index.find(t.index);
    if (it == by_index.end()) {
      c.divergence = t.index;
      c.detail = "b-file has no term at index " + std::to_string(t.index);
      return c;
    }
    if (it->second != t.value) {
      c.divergence = t.index;
      c.detail = "index " + std::to_string(t.index) + ": expected " + t.value.get_str() +
                 ", b-file has " + it->second.get_str();
      return c;
    }
    ++c.compared;
  }
  return c;
}

}  // namespace catalan_lab
