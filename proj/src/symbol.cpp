#include "jordanian/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace jordanian {
namespace {

// Insert-only; element addresses are stable under rehash.
const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_set<std::string> table;
  std::lock_guard lock(mutex);
  return &*table.emplace(name).first;
}

int rank(const std::string& name) {
  if (name == "h") return 0;
  if (name == "s") return 1;
  return 2;
}

}  // namespace

Symbol::Symbol(std::string_view name) : name_(intern(name)) {}

std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
  if (a.name_ == b.name_) return std::strong_ordering::equal;
  const int ra = rank(*a.name_);
  const int rb = rank(*b.name_);
  if (ra != rb) return ra <=> rb;
  return *a.name_ <=> *b.name_;
}

Symbol sym_h() {
  static const Symbol h("h");
  return h;
}

Symbol sym_s() {
  static const Symbol s("s");
  return s;
}

bool is_deformation_parameter(Symbol x) noexcept { return x == sym_h() || x == sym_s(); }

}  // namespace jordanian
