#include "balg/diagnostics.hpp"

#include <sstream>

namespace balg {

std::string Diagnostic::message() const {
  std::ostringstream os;
  os << code;
  if (!witness.empty()) {
    os << "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) os << ",";
      os << witness[i];
    }
    os << ")";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

}  // namespace balg
