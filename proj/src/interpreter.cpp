#include "luagfx/interpreter.hpp"

#include <pthread.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace luagfx {
namespace {

using namespace ast;

// Deep script recursion needs far more native stack than the default thread gets.
constexpr std::size_t kEvaluationStackBytes = std::size_t{1} << 30;

template <typename F>
void run_on_large_stack(F&& body) {
  struct Job {
    F* body;
    std::exception_ptr error;
  } job{&body, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kEvaluationStackBytes);
  pthread_t thread;
  auto entry = [](void* raw) -> void* {
    auto* j = static_cast<Job*>(raw);
    try {
      (*j->body)();
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };
  int rc = pthread_create(&thread, &attr, entry, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    body();  // fall back to the calling thread
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

std::optional<double> to_number(const Value& v) {
  if (v.is_number()) return v.as_number();
  if (v.is_string()) return parse_numeral(v.as_string());
  return std::nullopt;
}

}  // namespace

// ---- evaluator ---------------------------------------------------------------

class Interpreter::Evaluator {
 public:
  explicit Evaluator(Interpreter& session) : s_(session) {}

  Flow exec_block(const Block& block, const std::shared_ptr<Environment>& env) {
    for (const Stat& stat : block.stats) {
      Flow flow = exec(stat, env);
      if (flow != Flow::Normal) return flow;
    }
    if (block.last_stat) {
      tick(block.last_stat->span);
      s_.returned_ = eval_list(block.last_stat->exprs, env);
      return Flow::Return;
    }
    return Flow::Normal;
  }

  ValueList call(const Value& callee, std::span<const Value> args, const SourceSpan& at,
                 const std::string& what = "") {
    const auto& storage = callee.storage();
    if (const auto* builtin = std::get_if<std::shared_ptr<const Builtin>>(&storage)) {
      const Builtin& b = **builtin;
      int count = static_cast<int>(args.size());
      if (count < b.min_args || (b.max_args >= 0 && count > b.max_args)) {
        std::string expected = b.min_args == b.max_args
                                   ? std::to_string(b.min_args)
                                   : std::to_string(b.min_args) + (b.max_args < 0 ? "+" : "-" + std::to_string(b.max_args));
        throw RuntimeError("wrong number of arguments to '" + b.name + "' (expected " + expected + ", got " +
                               std::to_string(count) + ")",
                           at);
      }
      return b.fn(s_, args, at);
    }
    const auto* closure = std::get_if<std::shared_ptr<Closure>>(&storage);
    if (!closure) {
      throw RuntimeError(std::string("attempt to call a ") + callee.type_name() + " value" + what, at);
    }
    if (s_.call_depth_ >= s_.options_.max_call_depth) throw RuntimeError("stack overflow", at);
    const FunctionBody& fn = *(*closure)->function;
    auto scope = s_.new_scope((*closure)->captured);
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      scope->bindings[fn.params[i]] = i < args.size() ? args[i] : Value{};
    }
    ++s_.call_depth_;
    struct DepthGuard {
      int& depth;
      ~DepthGuard() { --depth; }
    } guard{s_.call_depth_};
    Flow flow = exec_block(fn.body, scope);
    if (flow == Flow::Return) return std::move(s_.returned_);
    return {};
  }

 private:
  void tick(const SourceSpan& at) {
    if (++s_.steps_ > s_.options_.step_limit) throw RuntimeError("execution budget exceeded", at);
  }

  // ---- statements -----------------------------------------------------------

  Flow exec(const Stat& stat, const std::shared_ptr<Environment>& env) {
    tick(stat.span);
    return std::visit([&](const auto& node) { return exec_node(node, stat, env); }, stat.node);
  }

  Flow exec_node(const LocalDecl& decl, const Stat&, const std::shared_ptr<Environment>& env) {
    ValueList values = eval_list(decl.exprs, env);
    for (std::size_t i = 0; i < decl.names.size(); ++i) {
      env->bindings[decl.names[i]] = i < values.size() ? std::move(values[i]) : Value{};
    }
    return Flow::Normal;
  }

  Flow exec_node(const Assign& assign, const Stat&, const std::shared_ptr<Environment>& env) {
    // Evaluate table/key operands of every target before any store, then the values.
    struct Target {
      const Expr* expr;
      std::shared_ptr<Table> table;
      Value key;
    };
    std::vector<Target> targets;
    targets.reserve(assign.targets.size());
    for (const auto& target : assign.targets) {
      Target t{target.get(), nullptr, {}};
      if (const auto* index = std::get_if<Index>(&target->node)) {
        t.table = table_operand(*index->base, env);
        t.key = eval(*index->key, env);
      } else if (const auto* field = std::get_if<Field>(&target->node)) {
        t.table = table_operand(*field->base, env);
        t.key = Value{field->name};
      }
      targets.push_back(std::move(t));
    }
    ValueList values = eval_list(assign.exprs, env);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Value value = i < values.size() ? values[i] : Value{};
      const Target& t = targets[i];
      if (const auto* var = std::get_if<Var>(&t.expr->node)) {
        assign_variable(var->name, std::move(value), env);
      } else {
        store(*t.table, t.key, std::move(value), t.expr->span);
      }
    }
    return Flow::Normal;
  }

  Flow exec_node(const CallStat& call, const Stat&, const std::shared_ptr<Environment>& env) {
    eval_multi(*call.call, env);
    return Flow::Normal;
  }

  Flow exec_node(const While& loop, const Stat&, const std::shared_ptr<Environment>& env) {
    while (eval(*loop.cond, env).truthy()) {
      Flow flow = exec_block(loop.body, s_.new_scope(env));
      if (flow == Flow::Break) break;
      if (flow == Flow::Return) return flow;
    }
    return Flow::Normal;
  }

  Flow exec_node(const If& branch, const Stat&, const std::shared_ptr<Environment>& env) {
    for (const auto& arm : branch.arms) {
      if (eval(*arm.cond, env).truthy()) return exec_block(arm.body, s_.new_scope(env));
    }
    if (branch.else_body) return exec_block(*branch.else_body, s_.new_scope(env));
    return Flow::Normal;
  }

  double for_operand(const Expr& expr, const std::shared_ptr<Environment>& env, const char* which) {
    Value v = eval(expr, env);
    if (!v.is_number()) throw RuntimeError(std::string("'for' ") + which + " must be a number", expr.span);
    return v.as_number();
  }

  Flow exec_node(const NumericFor& loop, const Stat& stat, const std::shared_ptr<Environment>& env) {
    double start = for_operand(*loop.start, env, "initial value");
    double stop = for_operand(*loop.stop, env, "limit");
    double step = for_operand(*loop.step, env, "step");
    if (step == 0) throw RuntimeError("'for' step is zero", stat.span);
    for (double i = start; step > 0 ? i <= stop : i >= stop; i += step) {
      auto scope = s_.new_scope(env);
      scope->bindings[loop.name] = Value{i};
      Flow flow = exec_block(loop.body, scope);
      if (flow == Flow::Break) break;
      if (flow == Flow::Return) return flow;
    }
    return Flow::Normal;
  }

  Flow exec_node(const Repeat& loop, const Stat&, const std::shared_ptr<Environment>& env) {
    while (true) {
      auto scope = s_.new_scope(env);  // the condition sees the body's locals
      Flow flow = exec_block(loop.body, scope);
      if (flow == Flow::Break) break;
      if (flow == Flow::Return) return flow;
      if (eval(*loop.cond, scope).truthy()) break;
    }
    return Flow::Normal;
  }

  Flow exec_node(const FunctionDecl& decl, const Stat&, const std::shared_ptr<Environment>& env) {
    if (decl.is_local) {
      env->bindings[decl.name] = Value{};  // visible to its own body for recursion
      env->bindings[decl.name] = make_closure(decl.function, env);
    } else {
      assign_variable(decl.name, make_closure(decl.function, env), env);
    }
    return Flow::Normal;
  }

  Flow exec_node(const Break&, const Stat&, const std::shared_ptr<Environment>&) { return Flow::Break; }

  Value make_closure(const std::shared_ptr<const FunctionBody>& fn, const std::shared_ptr<Environment>& env) {
    s_.scopes_.push_back(env);
    s_.maybe_prune();
    return Value{std::make_shared<Closure>(Closure{fn, env})};
  }

  void assign_variable(const std::string& name, Value value, const std::shared_ptr<Environment>& env) {
    if (Value* slot = env->find(name)) {
      *slot = std::move(value);
    } else {
      s_.globals_->bindings[name] = std::move(value);
    }
  }

  void store(Table& table, const Value& key, Value value, const SourceSpan& at) {
    if (key.is_number() && !std::isfinite(key.as_number()) && std::isnan(key.as_number())) {
      throw RuntimeError("index is NaN", at);
    }
    try {
      table.set(key, std::move(value));
    } catch (const std::invalid_argument& e) {
      throw RuntimeError(e.what(), at);
    }
  }

  // ---- expressions ----------------------------------------------------------

  ValueList eval_list(const ExprList& exprs, const std::shared_ptr<Environment>& env) {
    ValueList out;
    out.reserve(exprs.size());
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      if (i + 1 == exprs.size() && std::holds_alternative<Call>(exprs[i]->node)) {
        ValueList rest = eval_multi(*exprs[i], env);
        for (auto& v : rest) out.push_back(std::move(v));
      } else {
        out.push_back(eval(*exprs[i], env));
      }
    }
    return out;
  }

  ValueList eval_multi(const Expr& expr, const std::shared_ptr<Environment>& env) {
    if (const auto* call = std::get_if<Call>(&expr.node)) {
      tick(expr.span);
      Value callee = eval(*call->callee, env);
      ValueList args = eval_list(call->args, env);
      return this->call(callee, args, expr.span, describe_operand(*call->callee, env));
    }
    return {eval(expr, env)};
  }

  Value eval(const Expr& expr, const std::shared_ptr<Environment>& env) {
    if (std::holds_alternative<Call>(expr.node)) {
      ValueList results = eval_multi(expr, env);
      return results.empty() ? Value{} : std::move(results.front());
    }
    tick(expr.span);
    return std::visit([&](const auto& node) { return eval_node(node, expr, env); }, expr.node);
  }

  // " (global 'x')" style suffix naming the operand, for error messages.
  std::string describe_operand(const Expr& expr, const std::shared_ptr<Environment>& env) {
    if (const auto* var = std::get_if<Var>(&expr.node)) {
      bool local = false;
      for (Environment* e = env.get(); e && e != s_.globals_.get(); e = e->parent.get()) {
        if (e->bindings.count(var->name)) local = true;
      }
      return std::string(" (") + (local ? "local" : "global") + " '" + var->name + "')";
    }
    if (const auto* field = std::get_if<Field>(&expr.node)) return " (field '" + field->name + "')";
    return "";
  }

  Value eval_node(const Literal& lit, const Expr&, const std::shared_ptr<Environment>&) {
    return std::visit(
        [](const auto& v) -> Value {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            return Value{};
          } else {
            return Value{v};
          }
        },
        lit.value);
  }

  Value eval_node(const Var& var, const Expr&, const std::shared_ptr<Environment>& env) {
    if (Value* slot = env->find(var.name)) return *slot;
    return {};
  }

  std::shared_ptr<Table> table_operand(const Expr& base, const std::shared_ptr<Environment>& env) {
    Value v = eval(base, env);
    if (!v.is_table()) {
      throw RuntimeError(std::string("attempt to index a ") + v.type_name() + " value" + describe_operand(base, env),
                         base.span);
    }
    return v.as_table();
  }

  Value eval_node(const Index& index, const Expr&, const std::shared_ptr<Environment>& env) {
    auto table = table_operand(*index.base, env);
    return table->get(eval(*index.key, env));
  }

  Value eval_node(const Field& field, const Expr&, const std::shared_ptr<Environment>& env) {
    auto table = table_operand(*field.base, env);
    return table->get(Value{field.name});
  }

  Value eval_node(const Call&, const Expr& expr, const std::shared_ptr<Environment>& env) { return eval(expr, env); }

  Value eval_node(const Paren& paren, const Expr&, const std::shared_ptr<Environment>& env) {
    return eval(*paren.inner, env);
  }

  Value eval_node(const TableCtor& ctor, const Expr&, const std::shared_ptr<Environment>& env) {
    auto table = s_.new_table();
    double next = 1;
    for (std::size_t i = 0; i < ctor.fields.size(); ++i) {
      const TableField& field = ctor.fields[i];
      switch (field.kind) {
        case TableField::Kind::Positional:
          if (i + 1 == ctor.fields.size() && std::holds_alternative<Call>(field.value->node)) {
            for (auto& v : eval_multi(*field.value, env)) store(*table, Value{next++}, std::move(v), field.span);
          } else {
            store(*table, Value{next++}, eval(*field.value, env), field.span);
          }
          break;
        case TableField::Kind::Named:
          store(*table, Value{field.name}, eval(*field.value, env), field.span);
          break;
        case TableField::Kind::Keyed: {
          Value key = eval(*field.key, env);
          store(*table, key, eval(*field.value, env), field.span);
          break;
        }
      }
    }
    return Value{table};
  }

  Value eval_node(const FunctionExpr& fn, const Expr&, const std::shared_ptr<Environment>& env) {
    return make_closure(fn.function, env);
  }

  Value eval_node(const UnOp& un, const Expr& expr, const std::shared_ptr<Environment>& env) {
    Value v = eval(*un.operand, env);
    switch (un.op) {
      case UnaryOp::Not:
        return Value{!v.truthy()};
      case UnaryOp::Neg: {
        auto n = to_number(v);
        if (!n) throw arith_error(v, *un.operand, env);
        return Value{-*n};
      }
      case UnaryOp::Len:
        if (v.is_string()) return Value{static_cast<double>(v.as_string().size())};
        if (v.is_table()) return Value{static_cast<double>(v.as_table()->border())};
        throw RuntimeError(std::string("attempt to get length of a ") + v.type_name() + " value" +
                               describe_operand(*un.operand, env),
                           expr.span);
      case UnaryOp::BitNot:
        return Value{static_cast<double>(~to_integer(v, *un.operand, env))};
    }
    return {};
  }

  RuntimeError arith_error(const Value& v, const Expr& operand, const std::shared_ptr<Environment>& env) {
    return RuntimeError(std::string("attempt to perform arithmetic on a ") + v.type_name() + " value" +
                            describe_operand(operand, env),
                        operand.span);
  }

  std::int64_t to_integer(const Value& v, const Expr& operand, const std::shared_ptr<Environment>& env) {
    auto n = to_number(v);
    if (!n) {
      throw RuntimeError(std::string("attempt to perform bitwise operation on a ") + v.type_name() + " value" +
                             describe_operand(operand, env),
                         operand.span);
    }
    double d = *n;
    if (d != std::trunc(d) || d < -9223372036854775808.0 || d >= 9223372036854775808.0) {
      throw RuntimeError("number has no integer representation", operand.span);
    }
    return static_cast<std::int64_t>(d);
  }

  static std::int64_t shift_left(std::int64_t x, std::int64_t n) {
    if (n <= -64 || n >= 64) return 0;
    auto ux = static_cast<std::uint64_t>(x);
    return static_cast<std::int64_t>(n >= 0 ? ux << n : ux >> -n);
  }

  Value finite(double value, const SourceSpan& at) {
    if (!std::isfinite(value)) throw RuntimeError("arithmetic produced a non-finite number", at);
    return Value{value};
  }

  Value eval_node(const BinOp& bin, const Expr& expr, const std::shared_ptr<Environment>& env) {
    if (bin.op == BinaryOp::And) {
      Value lhs = eval(*bin.lhs, env);
      return lhs.truthy() ? eval(*bin.rhs, env) : lhs;
    }
    if (bin.op == BinaryOp::Or) {
      Value lhs = eval(*bin.lhs, env);
      return lhs.truthy() ? lhs : eval(*bin.rhs, env);
    }
    Value a = eval(*bin.lhs, env);
    Value b = eval(*bin.rhs, env);
    switch (bin.op) {
      case BinaryOp::Eq: return Value{a == b};
      case BinaryOp::NotEq: return Value{!(a == b)};
      case BinaryOp::Less: return Value{less_than(a, b, expr.span)};
      case BinaryOp::LessEq: return Value{less_equal(a, b, expr.span)};
      case BinaryOp::Greater: return Value{less_than(b, a, expr.span)};
      case BinaryOp::GreaterEq: return Value{less_equal(b, a, expr.span)};
      case BinaryOp::Concat: {
        auto piece = [&](const Value& v, const Expr& operand) -> std::string {
          if (v.is_string()) return v.as_string();
          if (v.is_number()) return format_number(v.as_number());
          throw RuntimeError(std::string("attempt to concatenate a ") + v.type_name() + " value" +
                                 describe_operand(operand, env),
                             operand.span);
        };
        std::string left = piece(a, *bin.lhs);
        return Value{left + piece(b, *bin.rhs)};
      }
      case BinaryOp::BitOr:
      case BinaryOp::BitXor:
      case BinaryOp::BitAnd:
      case BinaryOp::ShiftLeft:
      case BinaryOp::ShiftRight: {
        std::int64_t x = to_integer(a, *bin.lhs, env);
        std::int64_t y = to_integer(b, *bin.rhs, env);
        std::int64_t r = 0;
        switch (bin.op) {
          case BinaryOp::BitOr: r = x | y; break;
          case BinaryOp::BitXor: r = x ^ y; break;
          case BinaryOp::BitAnd: r = x & y; break;
          case BinaryOp::ShiftLeft: r = shift_left(x, y); break;
          default: r = shift_left(x, y == INT64_MIN ? 64 : -y); break;
        }
        return Value{static_cast<double>(r)};
      }
      default:
        break;
    }
    auto x = to_number(a);
    if (!x) throw arith_error(a, *bin.lhs, env);
    auto y = to_number(b);
    if (!y) throw arith_error(b, *bin.rhs, env);
    switch (bin.op) {
      case BinaryOp::Add: return finite(*x + *y, expr.span);
      case BinaryOp::Sub: return finite(*x - *y, expr.span);
      case BinaryOp::Mul: return finite(*x * *y, expr.span);
      case BinaryOp::Div:
        if (*y == 0) throw RuntimeError("division by zero", expr.span);
        return finite(*x / *y, expr.span);
      case BinaryOp::Mod: {
        if (*y == 0) throw RuntimeError("modulo by zero", expr.span);
        double m = std::fmod(*x, *y);
        if (m != 0 && (m < 0) != (*y < 0)) m += *y;
        return finite(m, expr.span);
      }
      case BinaryOp::Pow: return finite(std::pow(*x, *y), expr.span);
      default: break;
    }
    return {};
  }

  bool less_than(const Value& a, const Value& b, const SourceSpan& at) {
    if (a.is_number() && b.is_number()) return a.as_number() < b.as_number();
    if (a.is_string() && b.is_string()) return a.as_string() < b.as_string();
    throw compare_error(a, b, at);
  }

  bool less_equal(const Value& a, const Value& b, const SourceSpan& at) {
    if (a.is_number() && b.is_number()) return a.as_number() <= b.as_number();
    if (a.is_string() && b.is_string()) return a.as_string() <= b.as_string();
    throw compare_error(a, b, at);
  }

  RuntimeError compare_error(const Value& a, const Value& b, const SourceSpan& at) {
    if (std::string(a.type_name()) == b.type_name()) {
      return RuntimeError(std::string("attempt to compare two ") + a.type_name() + " values", at);
    }
    return RuntimeError(std::string("attempt to compare ") + a.type_name() + " with " + b.type_name(), at);
  }

  Interpreter& s_;
};

// ---- session -----------------------------------------------------------------

Interpreter::Interpreter(AssetResolver assets, InterpreterOptions options)
    : assets_(std::move(assets)), options_(options), globals_(std::make_shared<Environment>()) {
  register_builtin(Builtin{"print", 0, -1, [](Interpreter& session, std::span<const Value> args, const SourceSpan&) {
                             std::string line;
                             for (std::size_t i = 0; i < args.size(); ++i) {
                               if (i) line += '\t';
                               line += to_display_string(args[i]);
                             }
                             session.print_line(std::move(line));
                             return ValueList{};
                           }});
  register_graphics_builtins(*this);
}

Interpreter::~Interpreter() {
  for (auto& weak : scopes_) {
    if (auto env = weak.lock()) {
      auto bindings = std::move(env->bindings);
      env->bindings.clear();
      auto parent = std::move(env->parent);
    }
  }
  for (auto& weak : tables_) {
    if (auto table = weak.lock()) table->clear();
  }
  auto globals = std::move(globals_->bindings);
}

void Interpreter::register_builtin(Builtin builtin) {
  std::string name = builtin.name;
  globals_->bindings[name] = Value{std::make_shared<const Builtin>(std::move(builtin))};
}

Value Interpreter::global(const std::string& name) const {
  auto it = globals_->bindings.find(name);
  return it == globals_->bindings.end() ? Value{} : it->second;
}

std::optional<std::string> Interpreter::resolve_asset(std::string_view name) const {
  if (!assets_) return std::nullopt;
  return assets_(name);
}

std::shared_ptr<Environment> Interpreter::new_scope(std::shared_ptr<Environment> parent) {
  auto env = std::make_shared<Environment>();
  env->parent = std::move(parent);
  return env;
}

std::shared_ptr<Table> Interpreter::new_table() {
  auto table = std::make_shared<Table>();
  tables_.push_back(table);
  maybe_prune();
  return table;
}

void Interpreter::maybe_prune() {
  if (scopes_.size() + tables_.size() < prune_at_) return;
  std::erase_if(scopes_, [](const auto& w) { return w.expired(); });
  std::erase_if(tables_, [](const auto& w) { return w.expired(); });
  prune_at_ = std::max<std::size_t>(1024, 2 * (scopes_.size() + tables_.size()));
}

EvalOutcome Interpreter::evaluate(const Chunk& chunk) {
  if (started_) throw std::logic_error("an interpreter session evaluates one chunk");
  started_ = true;
  run_on_large_stack([&] {
    Evaluator evaluator(*this);
    evaluator.exec_block(chunk, new_scope(globals_));
  });
  ++evaluations_;
  return EvalOutcome{builder_.freeze(), console_};
}

ValueList Interpreter::call_value(const Value& callee, std::span<const Value> args, const SourceSpan& at) {
  Evaluator evaluator(*this);
  return evaluator.call(callee, args, at);
}

AssetResolver map_resolver(std::map<std::string, std::string, std::less<>> assets) {
  return [assets = std::move(assets)](std::string_view name) -> std::optional<std::string> {
    auto it = assets.find(name);
    if (it == assets.end()) return std::nullopt;
    return it->second;
  };
}

AssetResolver directory_resolver(std::string directory) {
  return [directory = std::move(directory)](std::string_view name) -> std::optional<std::string> {
    std::filesystem::path relative{std::string(name)};
    if (name.empty() || relative.is_absolute() || relative.has_root_name()) return std::nullopt;
    for (const auto& part : relative) {
      if (part == "..") return std::nullopt;
    }
    std::ifstream in(std::filesystem::path(directory) / relative, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream bytes;
    bytes << in.rdbuf();
    return bytes.str();
  };
}

}  // namespace luagfx
