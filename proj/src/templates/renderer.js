// WebGL2 renderer for the scene document: uploads each mesh once, then redraws the
// stored scene whenever the orbit camera moves. The script is never re-interpreted.

var SceneRenderer = (function () {
  var lightKindCodes = { point: 0, directional: 1, spot: 2 };
  var headlightComponents = {
    ambient: @HEADLIGHT_AMBIENT@,
    diffuse: @HEADLIGHT_DIFFUSE@,
    specular: @HEADLIGHT_SPECULAR@
  };

  function compileShader(context, type, source) {
    var shader = context.createShader(type);
    context.shaderSource(shader, source);
    context.compileShader(shader);
    if (!context.getShaderParameter(shader, context.COMPILE_STATUS)) {
      throw new Error("shader compilation failed: " + context.getShaderInfoLog(shader));
    }
    return shader;
  }

  function createProgram(context, sources) {
    var program = context.createProgram();
    context.attachShader(program, compileShader(context, context.VERTEX_SHADER, sources.vertex));
    context.attachShader(program, compileShader(context, context.FRAGMENT_SHADER, sources.fragment));
    context.linkProgram(program);
    if (!context.getProgramParameter(program, context.LINK_STATUS)) {
      throw new Error("shader linking failed: " + context.getProgramInfoLog(program));
    }
    return program;
  }

  function readVector(list, index) {
    return [list[index * 3], list[index * 3 + 1], list[index * 3 + 2]];
  }

  // Expands indexed triangles so every corner also carries its face centroid and face normal.
  function expandTriangles(mesh) {
    var triangleCount = mesh.triangles.length / 3;
    var positions = new Float32Array(triangleCount * 9);
    var normals = new Float32Array(triangleCount * 9);
    var centroids = new Float32Array(triangleCount * 9);
    var faceNormals = new Float32Array(triangleCount * 9);
    for (var i = 0; i < triangleCount; i++) {
      var corners = [];
      var cornerNormals = [];
      for (var j = 0; j < 3; j++) {
        var vertexIndex = mesh.triangles[i * 3 + j];
        corners.push(readVector(mesh.positions, vertexIndex));
        cornerNormals.push(readVector(mesh.normals, vertexIndex));
      }
      var centroid = [0, 0, 0];
      for (var k = 0; k < 3; k++) {
        centroid[k] = (corners[0][k] + corners[1][k] + corners[2][k]) / 3;
      }
      var faceNormal = MatrixMath.cross(MatrixMath.subtract(corners[1], corners[0]),
                                        MatrixMath.subtract(corners[2], corners[0]));
      if (MatrixMath.dot(faceNormal, faceNormal) === 0) {
        faceNormal = [0, 0, 0];
        for (var k = 0; k < 3; k++) {
          faceNormal[k] = cornerNormals[0][k] + cornerNormals[1][k] + cornerNormals[2][k];
        }
      }
      faceNormal = MatrixMath.normalize(faceNormal);
      for (var j = 0; j < 3; j++) {
        for (var k = 0; k < 3; k++) {
          var offset = i * 9 + j * 3 + k;
          positions[offset] = corners[j][k];
          normals[offset] = cornerNormals[j][k];
          centroids[offset] = centroid[k];
          faceNormals[offset] = faceNormal[k];
        }
      }
    }
    return { positions: positions, normals: normals, centroids: centroids, faceNormals: faceNormals };
  }

  function createBuffer(context, target, data) {
    var buffer = context.createBuffer();
    context.bindBuffer(target, buffer);
    context.bufferData(target, data, context.STATIC_DRAW);
    return buffer;
  }

  function bindAttribute(context, program, name, buffer) {
    var location = context.getAttribLocation(program, name);
    if (location < 0) {
      return;
    }
    context.bindBuffer(context.ARRAY_BUFFER, buffer);
    context.enableVertexAttribArray(location);
    context.vertexAttribPointer(location, 3, context.FLOAT, false, 0, 0);
  }

  // Builds one vertex array object per scene object for the program that will draw it.
  function uploadObject(context, programs, sceneObject, shadingModel) {
    var mesh = sceneObject.mesh;
    var upload = { sceneObject: sceneObject, vertexArray: context.createVertexArray() };
    context.bindVertexArray(upload.vertexArray);
    if (sceneObject.display_mode === "triangles") {
      var expanded = expandTriangles(mesh);
      upload.program = programs[shadingModel];
      upload.primitive = context.TRIANGLES;
      upload.count = mesh.triangles.length;
      bindAttribute(context, upload.program, "vertexPosition",
                    createBuffer(context, context.ARRAY_BUFFER, expanded.positions));
      bindAttribute(context, upload.program, "vertexNormal",
                    createBuffer(context, context.ARRAY_BUFFER, expanded.normals));
      bindAttribute(context, upload.program, "faceCentroid",
                    createBuffer(context, context.ARRAY_BUFFER, expanded.centroids));
      bindAttribute(context, upload.program, "faceNormal",
                    createBuffer(context, context.ARRAY_BUFFER, expanded.faceNormals));
    } else {
      upload.program = programs.vertexColor;
      bindAttribute(context, upload.program, "vertexPosition",
                    createBuffer(context, context.ARRAY_BUFFER, new Float32Array(mesh.positions)));
      bindAttribute(context, upload.program, "vertexNormal",
                    createBuffer(context, context.ARRAY_BUFFER, new Float32Array(mesh.normals)));
      if (sceneObject.display_mode === "lines") {
        createBuffer(context, context.ELEMENT_ARRAY_BUFFER, new Uint32Array(mesh.edges));
        upload.primitive = context.LINES;
        upload.count = mesh.edges.length;
        upload.indexed = true;
      } else {
        upload.primitive = context.POINTS;
        upload.count = mesh.positions.length / 3;
      }
    }
    context.bindVertexArray(null);
    return upload;
  }

  // With no declared lights the scene is lit by a headlight pointing along the view direction.
  function effectiveLights(sceneData, camera) {
    if (sceneData.lights.length > 0) {
      return sceneData.lights;
    }
    var lightDefaults = headlightComponents;
    return [{
      kind: "directional",
      position: camera.eye,
      direction: MatrixMath.normalize(MatrixMath.subtract(camera.target, camera.eye)),
      ambient: lightDefaults.ambient,
      diffuse: lightDefaults.diffuse,
      specular: lightDefaults.specular
    }];
  }

  function setLightUniforms(context, program, lights) {
    var count = Math.min(lights.length, ShaderSources.maximumLights);
    context.uniform1i(context.getUniformLocation(program, "lightCount"), count);
    for (var i = 0; i < count; i++) {
      var light = lights[i];
      var cutoff = light.kind === "spot" ? Math.cos(light.cutoff_deg * Math.PI / 180) : -1;
      var direction = light.direction || [0, 0, 0];
      var uniform = function (name) {
        return context.getUniformLocation(program, name + "[" + i + "]");
      };
      context.uniform1i(uniform("lightKind"), lightKindCodes[light.kind]);
      context.uniform3fv(uniform("lightPosition"), light.position);
      context.uniform3fv(uniform("lightDirection"), direction);
      context.uniform1f(uniform("lightCosineCutoff"), cutoff);
      context.uniform1f(uniform("lightExponent"), light.exponent || 0);
      context.uniform3fv(uniform("lightAmbient"), light.ambient);
      context.uniform3fv(uniform("lightDiffuse"), light.diffuse);
      context.uniform3fv(uniform("lightSpecular"), light.specular);
    }
  }

  function setObjectUniforms(context, program, sceneObject, shadingModel) {
    var material = sceneObject.material;
    var uniform = function (name) {
      return context.getUniformLocation(program, name);
    };
    context.uniformMatrix4fv(uniform("modelMatrix"), false, sceneObject.model_matrix);
    context.uniformMatrix3fv(uniform("normalMatrix"), false, MatrixMath.normalMatrix(sceneObject.model_matrix));
    context.uniform3fv(uniform("materialAmbient"), material.ambient);
    context.uniform3fv(uniform("materialDiffuse"), material.diffuse);
    context.uniform3fv(uniform("materialSpecular"), material.specular);
    context.uniform1f(uniform("materialShininess"), material.shininess);
    context.uniform1i(uniform("useHalfwayVector"), shadingModel === "blinn-phong" ? 1 : 0);
    context.uniform1f(uniform("pointSize"), 1);
  }

  function create(canvas, sceneData) {
    var context = canvas.getContext("webgl2");
    if (!context) {
      throw new Error("this browser does not support WebGL2");
    }
    var shadingModel = sceneData.shading;
    var programs = {
      flat: createProgram(context, ShaderSources.flat),
      gouraud: createProgram(context, ShaderSources.gouraud),
      "blinn-phong": createProgram(context, ShaderSources["blinn-phong"]),
      vertexColor: createProgram(context, ShaderSources.vertexColor)
    };
    var uploads = sceneData.objects.map(function (sceneObject) {
      return uploadObject(context, programs, sceneObject, shadingModel);
    });

    function draw(camera) {
      var width = canvas.clientWidth;
      var height = canvas.clientHeight;
      if (canvas.width !== width || canvas.height !== height) {
        canvas.width = width;
        canvas.height = height;
      }
      context.viewport(0, 0, width, height);
      context.enable(context.DEPTH_TEST);
      context.depthFunc(context.LESS);
      context.disable(context.CULL_FACE);
      var clear = sceneData.clear_color;
      context.clearColor(clear[0], clear[1], clear[2], 1);
      context.clear(context.COLOR_BUFFER_BIT | context.DEPTH_BUFFER_BIT);

      var projection = MatrixMath.perspective(camera.fov_y_deg, width / Math.max(height, 1), camera.near, camera.far);
      var viewProjection = MatrixMath.multiply(projection, MatrixMath.lookAt(camera.eye, camera.target, camera.up));
      var lights = effectiveLights(sceneData, camera);

      uploads.forEach(function (upload) {
        var program = upload.program;
        context.useProgram(program);
        context.uniformMatrix4fv(context.getUniformLocation(program, "viewProjectionMatrix"), false, viewProjection);
        context.uniform3fv(context.getUniformLocation(program, "cameraPosition"), camera.eye);
        setLightUniforms(context, program, lights);
        setObjectUniforms(context, program, upload.sceneObject, shadingModel);
        context.bindVertexArray(upload.vertexArray);
        if (upload.indexed) {
          context.drawElements(upload.primitive, upload.count, context.UNSIGNED_INT, 0);
        } else {
          context.drawArrays(upload.primitive, 0, upload.count);
        }
      });
      context.bindVertexArray(null);
    }

    return { draw: draw };
  }

  return { create: create };
})();
