#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "luagfx/codegen.hpp"
#include "luagfx/core.hpp"
#include "luagfx/raster.hpp"
#include "luagfx/scene_document.hpp"

namespace py = pybind11;

namespace {

using AssetMap = std::map<std::string, std::string, std::less<>>;

py::bytes to_bytes(const std::vector<std::uint8_t>& data) {
  return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

luagfx::Scene scene_or_raise(const std::string& source, const AssetMap& assets) {
  luagfx::Interpretation result = luagfx::interpret(source, luagfx::map_resolver(assets));
  if (!result.scene) {
    throw py::value_error("line " + std::to_string(result.line) + ": " + result.message);
  }
  return *result.scene;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Scripted scene interpreter, reference renderer and web template exporter";

  m.def(
      "interpret_document",
      [](const std::string& source, const AssetMap& assets) {
        py::gil_scoped_release release;
        return luagfx::interpret_document(source, assets);
      },
      py::arg("source"), py::arg("assets") = AssetMap{},
      "Interpret a script and return the JSON result document.");

  m.def(
      "export_document",
      [](const std::string& source, const AssetMap& assets) {
        std::vector<std::uint8_t> archive;
        {
          py::gil_scoped_release release;
          archive = luagfx::export_document(source, assets);
        }
        return to_bytes(archive);
      },
      py::arg("source"), py::arg("assets") = AssetMap{},
      "Zip archive of the exported web page; empty bytes when the script fails.");

  m.def(
      "scene_document",
      [](const std::string& source, const AssetMap& assets) {
        return luagfx::serialize_scene(scene_or_raise(source, assets));
      },
      py::arg("source"), py::arg("assets") = AssetMap{}, "Canonical scene document of a script.");

  m.def(
      "render_ppm",
      [](const std::string& source, int width, int height, unsigned threads, const AssetMap& assets) {
        luagfx::Scene scene = scene_or_raise(source, assets);
        std::string image;
        {
          py::gil_scoped_release release;
          image = luagfx::encode_ppm(luagfx::render(scene, width, height, luagfx::RenderOptions{threads}));
        }
        return py::bytes(image);
      },
      py::arg("source"), py::arg("width") = 256, py::arg("height") = 256, py::arg("threads") = 0,
      py::arg("assets") = AssetMap{}, "Reference render of a script as binary PPM bytes.");

  m.def(
      "render_document",
      [](const std::string& document, int width, int height) {
        luagfx::Scene scene = luagfx::parse_scene_document(document);
        return py::bytes(luagfx::encode_ppm(luagfx::render(scene, width, height)));
      },
      py::arg("document"), py::arg("width") = 256, py::arg("height") = 256,
      "Reference render of a scene document as binary PPM bytes.");

  py::register_exception<luagfx::DocumentError>(m, "DocumentError", PyExc_ValueError);
}
