#include "luagfx/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace luagfx {

const char* Value::type_name() const {
  switch (data_.index()) {
    case 0: return "nil";
    case 1: return "boolean";
    case 2: return "number";
    case 3: return "string";
    case 4: return "table";
    default: return "function";
  }
}

bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

std::string format_number(double value) {
  if (std::isnan(value)) return std::signbit(value) ? "-nan" : "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == std::trunc(value) && std::abs(value) < 1e16) {
    if (value == 0 && std::signbit(value)) return "-0";
    return std::to_string(static_cast<std::int64_t>(value));
  }
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string to_display_string(const Value& value) {
  const auto& s = value.storage();
  switch (s.index()) {
    case 0: return "nil";
    case 1: return value.as_bool() ? "true" : "false";
    case 2: return format_number(value.as_number());
    case 3: return value.as_string();
    case 4: return "table";
    default: return "function";
  }
}

namespace {

// Index into the array part for integral keys >= 1, else -1.
long long array_slot(double key) {
  if (key >= 1 && key == std::trunc(key) && key < 9.0e15) return static_cast<long long>(key) - 1;
  return -1;
}

}  // namespace

Value Table::get(const Value& key) const {
  if (key.is_number()) {
    double k = key.as_number();
    long long slot = array_slot(k);
    if (slot >= 0 && static_cast<std::size_t>(slot) < array.size()) return array[slot];
    auto it = numeric.find(k == 0 ? 0.0 : k);
    return it == numeric.end() ? Value{} : it->second;
  }
  if (key.is_string()) {
    auto it = strings.find(key.as_string());
    return it == strings.end() ? Value{} : it->second;
  }
  if (key.is_bool()) {
    const auto& slot = key.as_bool() ? key_true : key_false;
    return slot ? *slot : Value{};
  }
  return {};
}

void Table::set(const Value& key, Value value) {
  if (key.is_nil()) throw std::invalid_argument("index is nil");
  if (key.is_number()) {
    double k = key.as_number();
    if (std::isnan(k)) throw std::invalid_argument("index is NaN");
    if (k == 0) k = 0.0;  // fold -0
    long long slot = array_slot(k);
    if (slot >= 0 && static_cast<std::size_t>(slot) < array.size()) {
      if (!value.is_nil()) {
        array[slot] = std::move(value);
        return;
      }
      // Keep the array part contiguous: the tail moves to the numeric part.
      for (std::size_t i = slot + 1; i < array.size(); ++i) numeric[static_cast<double>(i + 1)] = std::move(array[i]);
      array.resize(slot);
      return;
    }
    if (slot >= 0 && static_cast<std::size_t>(slot) == array.size()) {
      if (value.is_nil()) {
        numeric.erase(k);
        return;
      }
      array.push_back(std::move(value));
      numeric.erase(k);
      // Pull any following keys out of the numeric part.
      for (auto it = numeric.find(static_cast<double>(array.size() + 1)); it != numeric.end();
           it = numeric.find(static_cast<double>(array.size() + 1))) {
        array.push_back(std::move(it->second));
        numeric.erase(it);
      }
      return;
    }
    if (value.is_nil()) {
      numeric.erase(k);
    } else {
      numeric[k] = std::move(value);
    }
    return;
  }
  if (key.is_string()) {
    if (value.is_nil()) {
      strings.erase(key.as_string());
    } else {
      strings[key.as_string()] = std::move(value);
    }
    return;
  }
  if (key.is_bool()) {
    auto& slot = key.as_bool() ? key_true : key_false;
    if (value.is_nil()) {
      slot.reset();
    } else {
      slot = std::move(value);
    }
    return;
  }
  throw std::invalid_argument(std::string("unsupported table key type (") + key.type_name() + ")");
}

void Table::clear() {
  // Move out first: destroying values can re-enter through other tables.
  auto a = std::move(array);
  auto n = std::move(numeric);
  auto s = std::move(strings);
  auto t = std::move(key_true);
  auto f = std::move(key_false);
  array.clear();
  numeric.clear();
  strings.clear();
  key_true.reset();
  key_false.reset();
}

Value* Environment::find(const std::string& name) {
  for (Environment* env = this; env; env = env->parent.get()) {
    auto it = env->bindings.find(name);
    if (it != env->bindings.end()) return &it->second;
  }
  return nullptr;
}

}  // namespace luagfx
