// GLSL ES 3.00 sources for the three shading models plus the per-vertex colour
// pipeline used by point and line display modes. All pipelines share the same
// lighting function: ambient, diffuse and specular per light, spot cone factor on
// diffuse and specular only, no distance attenuation, result clamped to [0, 1].

var ShaderSources = (function () {
  var maximumLights = 16;

  var lightingFunctions = [
    "#define MAXIMUM_LIGHTS " + maximumLights,
    "#define POINT_LIGHT 0",
    "#define DIRECTIONAL_LIGHT 1",
    "#define SPOT_LIGHT 2",
    "",
    "uniform int lightCount;",
    "uniform int lightKind[MAXIMUM_LIGHTS];",
    "uniform vec3 lightPosition[MAXIMUM_LIGHTS];",
    "uniform vec3 lightDirection[MAXIMUM_LIGHTS];",
    "uniform float lightCosineCutoff[MAXIMUM_LIGHTS];",
    "uniform float lightExponent[MAXIMUM_LIGHTS];",
    "uniform vec3 lightAmbient[MAXIMUM_LIGHTS];",
    "uniform vec3 lightDiffuse[MAXIMUM_LIGHTS];",
    "uniform vec3 lightSpecular[MAXIMUM_LIGHTS];",
    "",
    "uniform vec3 materialAmbient;",
    "uniform vec3 materialDiffuse;",
    "uniform vec3 materialSpecular;",
    "uniform float materialShininess;",
    "uniform vec3 cameraPosition;",
    "",
    "vec3 directionToLight(int index, vec3 surfacePosition) {",
    "  if (lightKind[index] == DIRECTIONAL_LIGHT) {",
    "    return -lightDirection[index];",
    "  }",
    "  return normalize(lightPosition[index] - surfacePosition);",
    "}",
    "",
    "float spotFactor(int index, vec3 surfacePosition) {",
    "  if (lightKind[index] != SPOT_LIGHT) {",
    "    return 1.0;",
    "  }",
    "  float alignment = dot(normalize(surfacePosition - lightPosition[index]), lightDirection[index]);",
    "  if (alignment < lightCosineCutoff[index]) {",
    "    return 0.0;",
    "  }",
    "  return pow(max(alignment, 0.0), lightExponent[index]);",
    "}",
    "",
    "vec3 illuminate(vec3 surfacePosition, vec3 surfaceNormal, bool useHalfwayVector) {",
    "  vec3 viewDirection = normalize(cameraPosition - surfacePosition);",
    "  vec3 color = vec3(0.0);",
    "  for (int i = 0; i < MAXIMUM_LIGHTS; i++) {",
    "    if (i >= lightCount) {",
    "      break;",
    "    }",
    "    color += materialAmbient * lightAmbient[i];",
    "    vec3 toLight = directionToLight(i, surfacePosition);",
    "    float lambert = dot(surfaceNormal, toLight);",
    "    if (lambert <= 0.0) {",
    "      continue;",
    "    }",
    "    float highlight;",
    "    if (useHalfwayVector) {",
    "      vec3 halfway = normalize(toLight + viewDirection);",
    "      highlight = pow(max(dot(surfaceNormal, halfway), 0.0), materialShininess);",
    "    } else {",
    "      vec3 reflected = surfaceNormal * (2.0 * lambert) - toLight;",
    "      highlight = pow(max(dot(reflected, viewDirection), 0.0), materialShininess);",
    "    }",
    "    float coneFactor = spotFactor(i, surfacePosition);",
    "    vec3 diffuseTerm = materialDiffuse * lightDiffuse[i] * lambert;",
    "    vec3 specularTerm = materialSpecular * lightSpecular[i] * highlight;",
    "    color += coneFactor * (diffuseTerm + specularTerm);",
    "  }",
    "  return clamp(color, 0.0, 1.0);",
    "}"
  ].join("\n");

  var transformUniforms = [
    "uniform mat4 modelMatrix;",
    "uniform mat4 viewProjectionMatrix;",
    "uniform mat3 normalMatrix;"
  ].join("\n");

  var colorFragment = [
    "#version 300 es",
    "precision highp float;",
    "in vec3 vertexColor;",
    "out vec4 fragmentColor;",
    "void main() {",
    "  fragmentColor = vec4(vertexColor, 1.0);",
    "}"
  ].join("\n");

  // Flat: one colour per triangle, lit at the triangle centroid with the face normal.
  var flatVertex = [
    "#version 300 es",
    "precision highp float;",
    "in vec3 vertexPosition;",
    "in vec3 faceCentroid;",
    "in vec3 faceNormal;",
    transformUniforms,
    lightingFunctions,
    "flat out vec3 vertexColor;",
    "void main() {",
    "  vec3 worldCentroid = (modelMatrix * vec4(faceCentroid, 1.0)).xyz;",
    "  vec3 worldNormal = normalize(normalMatrix * faceNormal);",
    "  vertexColor = illuminate(worldCentroid, worldNormal, false);",
    "  gl_Position = viewProjectionMatrix * modelMatrix * vec4(vertexPosition, 1.0);",
    "}"
  ].join("\n");

  var flatFragment = colorFragment.replace("in vec3 vertexColor;", "flat in vec3 vertexColor;");

  // Gouraud: lit per vertex, colour interpolated across the triangle.
  var gouraudVertex = [
    "#version 300 es",
    "precision highp float;",
    "in vec3 vertexPosition;",
    "in vec3 vertexNormal;",
    transformUniforms,
    lightingFunctions,
    "uniform bool useHalfwayVector;",
    "uniform float pointSize;",
    "out vec3 vertexColor;",
    "void main() {",
    "  vec3 worldPosition = (modelMatrix * vec4(vertexPosition, 1.0)).xyz;",
    "  vec3 worldNormal = normalize(normalMatrix * vertexNormal);",
    "  vertexColor = illuminate(worldPosition, worldNormal, useHalfwayVector);",
    "  gl_PointSize = pointSize;",
    "  gl_Position = viewProjectionMatrix * vec4(worldPosition, 1.0);",
    "}"
  ].join("\n");

  // Blinn-Phong: position and normal interpolated, lit per fragment with the halfway vector.
  var blinnPhongVertex = [
    "#version 300 es",
    "precision highp float;",
    "in vec3 vertexPosition;",
    "in vec3 vertexNormal;",
    transformUniforms,
    "out vec3 worldPosition;",
    "out vec3 worldNormal;",
    "void main() {",
    "  worldPosition = (modelMatrix * vec4(vertexPosition, 1.0)).xyz;",
    "  worldNormal = normalMatrix * vertexNormal;",
    "  gl_Position = viewProjectionMatrix * vec4(worldPosition, 1.0);",
    "}"
  ].join("\n");

  var blinnPhongFragment = [
    "#version 300 es",
    "precision highp float;",
    lightingFunctions,
    "in vec3 worldPosition;",
    "in vec3 worldNormal;",
    "out vec4 fragmentColor;",
    "void main() {",
    "  fragmentColor = vec4(illuminate(worldPosition, normalize(worldNormal), true), 1.0);",
    "}"
  ].join("\n");

  return {
    maximumLights: maximumLights,
    flat: { vertex: flatVertex, fragment: flatFragment },
    gouraud: { vertex: gouraudVertex, fragment: colorFragment },
    "blinn-phong": { vertex: blinnPhongVertex, fragment: blinnPhongFragment },
    vertexColor: { vertex: gouraudVertex, fragment: colorFragment }
  };
})();
