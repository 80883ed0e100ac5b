#pragma once

#include <chrono>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace catalan_lab {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<VerifyFailure> failures;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }

  template <class A, class B>
  void expect_eq(const std::string& input, const A& expected, const B& got) {
    ++cases_run;
    if (!(expected == got)) failures.push_back({input, str(expected), str(got)});
  }
  void expect(const std::string& input, bool ok) { expect_eq(input, true, ok); }

  void merge(const VerifyReport& other);
  // One summary line plus one line per failure; elapsed only on request.
  void print(std::ostream& os, bool with_timing = false) const;

 private:
  template <class T>
  static std::string str(const T& v) {
    if constexpr (requires { v.to_string(); }) {
      return v.to_string();
    } else {
      std::ostringstream os;
      os << std::boolalpha << v;
      return os.str();
    }
  }
};

// Highest n_max each suite accepts.
inline constexpr int kBijectionsCap = 8;
inline constexpr int kTransportCap = 9;
inline constexpr int kDistributionsCap = 10;
inline constexpr int kIdentitiesCap = 300;

// Each throws LimitError when n_max exceeds the suite cap.
VerifyReport verify_bijections(int n_max);
VerifyReport verify_transport(int n_max);
VerifyReport verify_distributions(int n_max);
VerifyReport verify_identities(int n_max);

}  // namespace catalan_lab
