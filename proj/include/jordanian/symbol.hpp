#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace jordanian {

// Interned parameter symbol. Two symbols with the same name share storage, so
// equality is a pointer comparison. The total order is fixed: "h" first, then
// "s", then every other name lexicographically.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept;

  std::size_t hash() const noexcept { return std::hash<const void*>{}(name_); }

 private:
  const std::string* name_;
};

// The two deformation parameters.
Symbol sym_h();
Symbol sym_s();

bool is_deformation_parameter(Symbol x) noexcept;

}  // namespace jordanian

template <>
struct std::hash<jordanian::Symbol> {
  std::size_t operator()(jordanian::Symbol x) const noexcept { return x.hash(); }
};
