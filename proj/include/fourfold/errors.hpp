#pragma once

#include <stdexcept>
#include <string>

namespace fourfold {

enum class ErrorKind {
  Parse,        // malformed permutation or config text
  Catalog,      // unknown subgroup or table name
  Containment,  // subgroup not contained where required
  Schema,       // symbol set or flag set does not match the group
  Parity,       // profile would give a fractional genus
  Domain,       // argument outside the operation's domain
  Internal      // a case split that should be exhaustive was not
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fourfold
