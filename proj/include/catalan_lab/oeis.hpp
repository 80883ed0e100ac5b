#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "catalan_lab/count.hpp"
#include "catalan_lab/words.hpp"

namespace catalan_lab {

// A statistic total tied to an OEIS sequence. `offset` is the first n the
// sequence covers; `oeis_offset` is the OEIS index of that first term.
struct OeisBinding {
  std::string id;  // empty for a user-defined binding
  StatId stat;
  int offset = 1;
  int oeis_offset = 1;
};

const std::vector<OeisBinding>& builtin_bindings();
// Throws DomainError for an unknown A-number.
const OeisBinding& find_binding(std::string_view id);
// The built-in binding for a statistic, if it has one.
std::optional<OeisBinding> binding_for(const StatId& stat);

enum class OeisIndexing { N, Oeis };

struct BfileTerm {
  long index;
  Count value;
};

// Terms offset, offset+1, ... from the closed form.
std::vector<BfileTerm> oeis_terms(const OeisBinding& b, int terms,
                                  OeisIndexing indexing = OeisIndexing::N);
void write_bfile(std::ostream& os, const std::vector<BfileTerm>& terms);
// Skips blank lines and '#' comments. Throws DomainError on malformed lines.
std::vector<BfileTerm> read_bfile(std::istream& is);

struct BfileComparison {
  std::size_t compared = 0;
  // First index (in the emitted indexing) where the values differ or the
  // b-file has no term.
  std::optional<long> divergence;
  std::string detail;
  bool matched() const { return !divergence && compared > 0; }
};

// Aligns by index after shifting the b-file indices by `index_shift`.
BfileComparison compare_bfile(const std::vector<BfileTerm>& ours,
                              const std::vector<BfileTerm>& theirs, long index_shift = 0);

}  // namespace catalan_lab
