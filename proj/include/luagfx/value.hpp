#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "luagfx/ast.hpp"

namespace luagfx {

class Interpreter;
class Value;
struct Table;
struct Closure;
struct Builtin;
struct Environment;

using ValueList = std::vector<Value>;

/// Runtime value of the scripting language. Numbers are always 64-bit floats.
class Value {
 public:
  using Storage = std::variant<std::monostate, bool, double, std::string, std::shared_ptr<Table>,
                               std::shared_ptr<Closure>, std::shared_ptr<const Builtin>>;

  Value() = default;
  Value(bool b) : data_(b) {}
  Value(double d) : data_(d) {}
  Value(int i) : data_(static_cast<double>(i)) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(const char* s) : data_(std::string(s)) {}
  Value(std::shared_ptr<Table> t) : data_(std::move(t)) {}
  Value(std::shared_ptr<Closure> c) : data_(std::move(c)) {}
  Value(std::shared_ptr<const Builtin> b) : data_(std::move(b)) {}

  bool is_nil() const { return std::holds_alternative<std::monostate>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_number() const { return std::holds_alternative<double>(data_); }
  bool is_string() const { return std::holds_alternative<std::string>(data_); }
  bool is_table() const { return std::holds_alternative<std::shared_ptr<Table>>(data_); }
  bool is_function() const {
    return std::holds_alternative<std::shared_ptr<Closure>>(data_) ||
           std::holds_alternative<std::shared_ptr<const Builtin>>(data_);
  }

  bool as_bool() const { return std::get<bool>(data_); }
  double as_number() const { return std::get<double>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const std::shared_ptr<Table>& as_table() const { return std::get<std::shared_ptr<Table>>(data_); }
  const Storage& storage() const { return data_; }

  /// nil and false are false; everything else is true.
  bool truthy() const { return !(is_nil() || (is_bool() && !as_bool())); }

  /// "nil", "boolean", "number", "string", "table" or "function".
  const char* type_name() const;

  /// Raw equality: no coercion, tables and functions compare by identity.
  friend bool operator==(const Value& a, const Value& b);

 private:
  Storage data_;
};

/// Shortest decimal that round-trips; integral values below 1e16 print without a fraction.
std::string format_number(double value);

/// print()/tostring rendering of a value.
std::string to_display_string(const Value& value);

/// Lua table restricted to what the language needs: a contiguous array part from
/// index 1, plus hashed parts for other numeric, string and boolean keys.
struct Table {
  std::vector<Value> array;
  std::map<double, Value> numeric;
  std::unordered_map<std::string, Value> strings;
  std::optional<Value> key_true;
  std::optional<Value> key_false;

  Value get(const Value& key) const;
  /// Throws std::invalid_argument for nil or unsupported key types.
  void set(const Value& key, Value value);
  /// The length operator: size of the array part.
  std::size_t border() const { return array.size(); }
  void clear();
};

struct Closure {
  std::shared_ptr<const ast::FunctionBody> function;
  std::shared_ptr<Environment> captured;
};

using BuiltinFn = std::function<ValueList(Interpreter&, std::span<const Value>, const SourceSpan&)>;

struct Builtin {
  std::string name;
  int min_args = 0;
  int max_args = -1;  // -1 is variadic
  BuiltinFn fn;
};

/// A lexical scope. Lookups walk outward; the root holds the globals.
struct Environment {
  std::unordered_map<std::string, Value> bindings;
  std::shared_ptr<Environment> parent;

  Value* find(const std::string& name);
};

}  // namespace luagfx
