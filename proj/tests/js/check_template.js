// Exports a script with the CLI, unpacks the archive and checks the generated scripts.
"use strict";

const assert = require("assert");
const childProcess = require("child_process");
const fs = require("fs");
const os = require("os");
const path = require("path");
const vm = require("vm");

const [cliPath, scriptPath] = process.argv.slice(2);
const workDirectory = fs.mkdtempSync(path.join(os.tmpdir(), "luagfx-template-"));
const archivePath = path.join(workDirectory, "scene.zip");
const documentPath = path.join(workDirectory, "scene.json");

function readStoredZip(bytes) {
  const entries = new Map();
  let offset = 0;
  while (bytes.readUInt32LE(offset) === 0x04034b50) {
    const method = bytes.readUInt16LE(offset + 8);
    const size = bytes.readUInt32LE(offset + 18);
    const nameLength = bytes.readUInt16LE(offset + 26);
    const extraLength = bytes.readUInt16LE(offset + 28);
    assert.strictEqual(method, 0, "entries are stored");
    const name = bytes.toString("utf8", offset + 30, offset + 30 + nameLength);
    const start = offset + 30 + nameLength + extraLength;
    entries.set(name, bytes.toString("utf8", start, start + size));
    offset = start + size;
  }
  return entries;
}

function closeTo(actual, expected, label) {
  assert.strictEqual(actual.length, expected.length, label);
  for (let index = 0; index < expected.length; index++) {
    assert.ok(Math.abs(actual[index] - expected[index]) < 1e-12, label + " at " + index);
  }
}

try {
  childProcess.execFileSync(cliPath, ["export", scriptPath, "--out", archivePath]);
  childProcess.execFileSync(cliPath, ["run", scriptPath, "--scene-out", documentPath]);
  const files = readStoredZip(fs.readFileSync(archivePath));
  assert.deepStrictEqual([...files.keys()],
    ["index.html", "scene_data.js", "shaders.js", "matrix.js", "renderer.js", "main.js"]);

  for (const [name, text] of files) {
    if (name.endsWith(".js")) {
      new vm.Script(text, { filename: name });
    }
  }

  const html = files.get("index.html");
  const sources = [...html.matchAll(/src="([^"]+)"/g)].map((match) => match[1]);
  assert.deepStrictEqual(sources.slice().sort(), [...files.keys()].filter((name) => name !== "index.html").sort());

  const sandbox = { module: { exports: {} } };
  vm.runInNewContext(files.get("matrix.js"), sandbox);
  const matrixMath = sandbox.module.exports;

  closeTo(matrixMath.perspective(90, 1, 1, 3), [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -2, -1, 0, 0, -3, 0], "perspective");
  closeTo(matrixMath.lookAt([0, 0, 5], [0, 0, 0], [0, 1, 0]),
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -5, 1], "lookAt");
  closeTo(matrixMath.lookAt([5, 0, 0], [0, 0, 0], [0, 1, 0]),
    [0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, -5, 1], "lookAt from +x");
  const scaled = [2, 0, 0, 0, 0, 4, 0, 0, 0, 0, 8, 0, 1, 2, 3, 1];
  closeTo(matrixMath.normalMatrix(scaled), [0.5, 0, 0, 0, 0.25, 0, 0, 0, 0.125], "normalMatrix of a scale");
  const quarterTurn = [0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1];
  closeTo(matrixMath.normalMatrix(quarterTurn), [0, 0, -1, 0, 1, 0, 1, 0, 0], "normalMatrix of a rotation");
  closeTo(matrixMath.transformPoint(matrixMath.multiply(quarterTurn, scaled), [1, 0, 0]), [3, 2, -3], "multiply");

  const sceneContext = {};
  vm.runInNewContext(files.get("scene_data.js") + "\nthis.embedded = sceneDocument;", sceneContext);
  const expected = JSON.parse(fs.readFileSync(documentPath, "utf8"));
  assert.deepStrictEqual(JSON.parse(JSON.stringify(sceneContext.embedded)), expected);

  const shaderContext = {};
  vm.runInNewContext(files.get("shaders.js") + "\nthis.shaders = ShaderSources;", shaderContext);
  for (const model of ["flat", "gouraud", "blinn-phong"]) {
    assert.ok(JSON.stringify(shaderContext.shaders).includes(model), "shader pair for " + model);
  }
  console.log("template scripts ok: " + files.size + " files");
} finally {
  fs.rmSync(workDirectory, { recursive: true, force: true });
}
