import io
import json
import zipfile

import pytest

import luagfx

CUBE = 'DrawCube("triangles")\n'
TRIANGLE_OBJ = "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"


def test_interpret_success():
    result = luagfx.interpret('print(2^10)\n' + CUBE)
    assert result["status"] == "ok"
    assert result["console"] == ["1024"]
    assert len(result["scene"]["objects"]) == 1
    assert len(result["scene"]["objects"][0]["mesh"]["triangles"]) == 36


def test_interpret_errors():
    syntax = luagfx.interpret("print(1)\n\nlocal = 3\n")
    assert syntax["status"] == "syntax_error"
    assert syntax["line"] == 3
    assert "scene" not in syntax

    runtime = luagfx.interpret('print("kept")\nDrawCone("solid")\n')
    assert runtime["status"] == "runtime_error"
    assert runtime["line"] == 2
    assert runtime["console"] == ["kept"]


def test_assets_resolve_from_memory():
    result = luagfx.interpret('DrawObject("points", "tri.obj")', {"tri.obj": TRIANGLE_OBJ})
    assert result["status"] == "ok"
    assert result["scene"]["objects"][0]["source_name"] == "tri.obj"
    missing = luagfx.interpret('DrawObject("points", "tri.obj")')
    assert missing["status"] == "runtime_error"


def test_export_archive():
    archive = luagfx.export_document(CUBE)
    assert archive == luagfx.export_document(CUBE)
    with zipfile.ZipFile(io.BytesIO(archive)) as bundle:
        assert bundle.testzip() is None
        names = bundle.namelist()
        scene_data = bundle.read("scene_data.js").decode()
    assert len(names) == 6 and names[0] == "index.html"
    assert luagfx.scene_document(CUBE).rstrip("\n") in scene_data
    assert luagfx.export_document("DrawCone('solid')") == b""


def test_render():
    image = luagfx.render_ppm(CUBE, 32, 16, threads=2)
    assert image.startswith(b"P6\n32 16\n255\n")
    assert len(image) == len(b"P6\n32 16\n255\n") + 32 * 16 * 3
    assert image == luagfx.render_ppm(CUBE, 32, 16, threads=1)
    assert luagfx.render_document(luagfx.scene_document(CUBE), 32, 16) == image
    with pytest.raises(ValueError, match="line 1"):
        luagfx.render_ppm("local = 3")


def test_scene_document_is_canonical():
    document = luagfx.scene_document(CUBE)
    assert json.loads(document)["shading"] == "blinn-phong"
    with pytest.raises(ValueError):
        luagfx.render_document("{}")
