#pragma once

#include <string>

#include "pgroup/corpus.hpp"
#include "pgroup/presentation.hpp"

namespace fixtures {

// The order-81 example group in its text form.
inline const char* j_text() {
  return "# 2-generator 3-group of order 81, maximal class\n"
         "p 3\n"
         "ngens 4\n"
         "power 1 : 4^1\n"
         "power 2 : 4^2\n"
         "power 3 :\n"
         "power 4 :\n"
         "comm 2 1 : 3^1\n"
         "comm 3 1 : 4^1\n";
}

inline pgroup::PcPresentation j_group() { return pgroup::PcPresentation::parse(j_text()); }

inline pgroup::PcPresentation parse(const std::string& text) {
  return pgroup::PcPresentation::parse(text);
}

inline pgroup::PcpPtr get(const std::string& builtin_name) {
  return pgroup::builtin(builtin_name).pc;
}

}  // namespace fixtures
