#include "tropamalg/weight.hpp"

#include "tropamalg/errors.hpp"

namespace tropamalg {

Weight weight_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("BadFile", "empty weight string");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("BadFile", "weight is not a decimal integer", {{"value", s}});
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw DomainError("BadFile", "weight is not a decimal integer", {{"value", s}});
    }
  }
  return Weight(s);
}

}  // namespace tropamalg
