// Matrix helpers for 4x4 transforms stored column-major in Float32Array-compatible
// arrays: element (row, column) lives at index column * 4 + row.

var MatrixMath = (function () {
  function identity() {
    return [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1];
  }

  function multiply(left, right) {
    var result = new Array(16);
    for (var column = 0; column < 4; column++) {
      for (var row = 0; row < 4; row++) {
        var sum = 0;
        for (var k = 0; k < 4; k++) {
          sum += left[k * 4 + row] * right[column * 4 + k];
        }
        result[column * 4 + row] = sum;
      }
    }
    return result;
  }

  function subtract(first, second) {
    return [first[0] - second[0], first[1] - second[1], first[2] - second[2]];
  }

  function dot(first, second) {
    return first[0] * second[0] + first[1] * second[1] + first[2] * second[2];
  }

  function cross(first, second) {
    return [
      first[1] * second[2] - first[2] * second[1],
      first[2] * second[0] - first[0] * second[2],
      first[0] * second[1] - first[1] * second[0]
    ];
  }

  function normalize(vector) {
    var length = Math.sqrt(dot(vector, vector));
    if (length === 0) {
      return [vector[0], vector[1], vector[2]];
    }
    return [vector[0] / length, vector[1] / length, vector[2] / length];
  }

  // Right-handed view matrix: the camera looks down -z in view space.
  function lookAt(eye, target, up) {
    var forward = normalize(subtract(target, eye));
    var side = normalize(cross(forward, up));
    var upward = cross(side, forward);
    return [
      side[0], upward[0], -forward[0], 0,
      side[1], upward[1], -forward[1], 0,
      side[2], upward[2], -forward[2], 0,
      -dot(side, eye), -dot(upward, eye), dot(forward, eye), 1
    ];
  }

  // Maps the near and far planes to the [-1, 1] clip range.
  function perspective(fieldOfViewDegrees, aspect, nearPlane, farPlane) {
    var focal = 1 / Math.tan((fieldOfViewDegrees * Math.PI / 180) / 2);
    var depthRange = nearPlane - farPlane;
    return [
      focal / aspect, 0, 0, 0,
      0, focal, 0, 0,
      0, 0, (farPlane + nearPlane) / depthRange, -1,
      0, 0, (2 * farPlane * nearPlane) / depthRange, 0
    ];
  }

  // Inverse-transpose of the upper 3x3 block, column-major, for transforming normals.
  function normalMatrix(model) {
    var a00 = model[0], a10 = model[1], a20 = model[2];
    var a01 = model[4], a11 = model[5], a21 = model[6];
    var a02 = model[8], a12 = model[9], a22 = model[10];
    var cofactor00 = a11 * a22 - a12 * a21;
    var cofactor01 = a12 * a20 - a10 * a22;
    var cofactor02 = a10 * a21 - a11 * a20;
    var cofactor10 = a02 * a21 - a01 * a22;
    var cofactor11 = a00 * a22 - a02 * a20;
    var cofactor12 = a01 * a20 - a00 * a21;
    var cofactor20 = a01 * a12 - a02 * a11;
    var cofactor21 = a02 * a10 - a00 * a12;
    var cofactor22 = a00 * a11 - a01 * a10;
    var determinant = a00 * cofactor00 + a01 * cofactor01 + a02 * cofactor02;
    if (determinant === 0) {
      return [1, 0, 0, 0, 1, 0, 0, 0, 1];
    }
    var scale = 1 / determinant;
    return [
      cofactor00 * scale, cofactor10 * scale, cofactor20 * scale,
      cofactor01 * scale, cofactor11 * scale, cofactor21 * scale,
      cofactor02 * scale, cofactor12 * scale, cofactor22 * scale
    ];
  }

  function transformPoint(matrix, point) {
    var result = [0, 0, 0];
    for (var row = 0; row < 3; row++) {
      result[row] = matrix[row] * point[0] + matrix[4 + row] * point[1] + matrix[8 + row] * point[2] + matrix[12 + row];
    }
    return result;
  }

  return {
    identity: identity,
    multiply: multiply,
    subtract: subtract,
    dot: dot,
    cross: cross,
    normalize: normalize,
    lookAt: lookAt,
    perspective: perspective,
    normalMatrix: normalMatrix,
    transformPoint: transformPoint
  };
})();

if (typeof module !== "undefined") {
  module.exports = MatrixMath;
}
