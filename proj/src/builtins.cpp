#include <functional>
#include <memory>
#include <string>

#include "luagfx/interpreter.hpp"

namespace luagfx {
namespace {

using Args = std::span<const Value>;

RuntimeError bad_argument(int position, const std::string& function, const std::string& detail,
                          const SourceSpan& at) {
  return RuntimeError("bad argument #" + std::to_string(position) + " to '" + function + "' (" + detail + ")", at);
}

const std::string& string_arg(Args args, int position, const std::string& function, const SourceSpan& at) {
  const Value& v = args[position - 1];
  if (!v.is_string()) throw bad_argument(position, function, std::string("string expected, got ") + v.type_name(), at);
  return v.as_string();
}

double number_arg(Args args, int position, const std::string& function, const SourceSpan& at) {
  const Value& v = args[position - 1];
  if (!v.is_number()) throw bad_argument(position, function, std::string("number expected, got ") + v.type_name(), at);
  return v.as_number();
}

Vec3 vector_arg(Args args, int position, const std::string& function, const SourceSpan& at) {
  const Value& v = args[position - 1];
  if (!v.is_table()) throw bad_argument(position, function, std::string("table expected, got ") + v.type_name(), at);
  const Table& table = *v.as_table();
  bool shaped = table.array.size() == 3 && table.numeric.empty() && table.strings.empty() && !table.key_true &&
                !table.key_false;
  if (shaped) {
    for (const Value& element : table.array) shaped = shaped && element.is_number();
  }
  if (!shaped) throw bad_argument(position, function, "malformed vector: expected 3 numbers", at);
  return {table.array[0].as_number(), table.array[1].as_number(), table.array[2].as_number()};
}

using Body = std::function<void(Interpreter&, Args, const SourceSpan&, const std::string&)>;

// Wraps a graphics call: fixed arity, SceneError reported at the call site, no results.
void add(Interpreter& interpreter, std::string name, int arity, Body body) {
  std::string label = name;
  interpreter.register_builtin(
      Builtin{std::move(name), arity, arity,
              [label, body = std::move(body)](Interpreter& session, Args args, const SourceSpan& at) {
                try {
                  body(session, args, at, label);
                } catch (const SceneError& e) {
                  throw RuntimeError(e.what(), at);
                }
                return ValueList{};
              }});
}

void add_primitive(Interpreter& interpreter, std::string name, SourceKind kind) {
  add(interpreter, std::move(name), 1, [kind](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().draw_primitive(kind, string_arg(args, 1, fn, at));
  });
}

std::shared_ptr<const Mesh> load_asset(Interpreter& s, const std::string& name, const SourceSpan& at) {
  auto& cache = s.mesh_cache();
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  std::optional<std::string> bytes = s.resolve_asset(name);
  if (!bytes) throw RuntimeError("asset not found '" + name + "'", at);
  std::shared_ptr<const Mesh> mesh;
  try {
    mesh = std::make_shared<const Mesh>(compute_vertex_normals(parse_obj(*bytes)));
  } catch (const ObjError& e) {
    throw RuntimeError(name + ": " + e.what(), at);
  }
  if (mesh->triangles.empty()) throw RuntimeError(name + ": OBJ has no faces", at);
  cache.emplace(name, mesh);
  return mesh;
}

void add_component(Interpreter& interpreter, std::string name, Component which) {
  add(interpreter, std::move(name), 1,
      [which](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
        s.scene_builder().set_component(which, vector_arg(args, 1, fn, at));
      });
}

}  // namespace

void register_graphics_builtins(Interpreter& interpreter) {
  add_primitive(interpreter, "DrawCube", SourceKind::Cube);
  add_primitive(interpreter, "DrawCone", SourceKind::Cone);
  add_primitive(interpreter, "DrawSphere", SourceKind::Sphere);
  add_primitive(interpreter, "DrawCylinder", SourceKind::Cylinder);
  add_primitive(interpreter, "DrawGrid", SourceKind::Grid);

  add(interpreter, "DrawObject", 2, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    const std::string& mode = string_arg(args, 1, fn, at);
    const std::string& asset = string_arg(args, 2, fn, at);
    if (!parse_display_mode(mode)) throw SceneError("unknown display mode '" + mode + "'");
    s.scene_builder().draw_mesh(mode, load_asset(s, asset, at), asset);
  });

  add(interpreter, "TranslateObject", 1, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().translate(vector_arg(args, 1, fn, at));
  });
  add(interpreter, "RotateObject", 2, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().rotate(number_arg(args, 1, fn, at), vector_arg(args, 2, fn, at));
  });
  add(interpreter, "ScaleObject", 1, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().scale(vector_arg(args, 1, fn, at));
  });

  add(interpreter, "DrawPointLight", 1, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().add_point_light(vector_arg(args, 1, fn, at));
  });
  add(interpreter, "DrawDirectionalLight", 2,
      [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
        s.scene_builder().add_directional_light(vector_arg(args, 1, fn, at), vector_arg(args, 2, fn, at));
      });
  add(interpreter, "DrawSpotLight", 4, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().add_spot_light(vector_arg(args, 1, fn, at), vector_arg(args, 2, fn, at),
                                     number_arg(args, 3, fn, at), number_arg(args, 4, fn, at));
  });

  add(interpreter, "ChangeLighting", 1, [](Interpreter& s, Args args, const SourceSpan& at, const std::string& fn) {
    s.scene_builder().change_lighting(string_arg(args, 1, fn, at));
  });
  add_component(interpreter, "AmbientComponent", Component::Ambient);
  add_component(interpreter, "DiffuseComponent", Component::Diffuse);
  add_component(interpreter, "SpecularComponent", Component::Specular);
}

}  // namespace luagfx
