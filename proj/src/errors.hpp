#pragma once
// Error taxonomy shared by the C++ core and the C ABI layer.

#include <sstream>
#include <stdexcept>
#include <string>

namespace sata {

enum class ErrorCode {
  Parse = 1,          // malformed input text (with line/column where known)
  Arity,              // composing diagrams whose widths do not line up
  WidthMismatch,      // comparing objects of different type m->n
  WidthCap,           // an operation would materialize a table wider than the cap
  NotMonotone,        // explicit pair set is not a monotone relation
  NotDownwardClosed,  // explicit assignment set is not downward closed
  NotPrincipal,       // relation is not a principal up-set
  Atom,               // unknown/duplicate atom, or mismatched atom sets
  InvalidArgument,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode c, std::string msg) : std::runtime_error(std::move(msg)), code(c) {}
  ErrorCode code;
};

namespace detail {
inline void cat_into(std::ostringstream&) {}
template <class T, class... Ts>
void cat_into(std::ostringstream& os, T&& v, Ts&&... rest) {
  os << v;
  cat_into(os, std::forward<Ts>(rest)...);
}
}  // namespace detail

template <class... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  detail::cat_into(os, std::forward<Ts>(parts)...);
  return os.str();
}

template <class... Ts>
[[noreturn]] void fail(ErrorCode c, Ts&&... parts) {
  throw Error(c, cat(std::forward<Ts>(parts)...));
}

}  // namespace sata
