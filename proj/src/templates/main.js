// Entry point: creates the renderer for the embedded scene and wires the orbit camera.
// Dragging orbits around the camera target, the wheel moves the camera closer or further.

(function () {
  var canvas = document.getElementById("sceneCanvas");
  var statusMessage = document.getElementById("statusMessage");
  var initialCamera = sceneDocument.camera;

  var offset = MatrixMath.subtract(initialCamera.eye, initialCamera.target);
  var orbit = {
    distance: Math.sqrt(MatrixMath.dot(offset, offset)),
    azimuth: Math.atan2(offset[0], offset[2]),
    elevation: Math.asin(offset[1] / Math.max(Math.sqrt(MatrixMath.dot(offset, offset)), 1e-9)),
    moved: false
  };
  var elevationLimit = Math.PI / 2 - 0.01;
  var dragging = false;
  var lastPointer = { left: 0, top: 0 };

  // Camera for the current orbit angles; starts exactly at the scene's own camera.
  function currentCamera() {
    var horizontal = orbit.distance * Math.cos(orbit.elevation);
    var target = initialCamera.target;
    return {
      eye: [
        target[0] + horizontal * Math.sin(orbit.azimuth),
        target[1] + orbit.distance * Math.sin(orbit.elevation),
        target[2] + horizontal * Math.cos(orbit.azimuth)
      ],
      target: target,
      up: initialCamera.up,
      fov_y_deg: initialCamera.fov_y_deg,
      near: initialCamera.near,
      far: initialCamera.far
    };
  }

  var renderer;
  try {
    renderer = SceneRenderer.create(canvas, sceneDocument);
  } catch (error) {
    statusMessage.textContent = error.message;
    return;
  }

  var redrawPending = false;
  function requestRedraw() {
    if (redrawPending) {
      return;
    }
    redrawPending = true;
    window.requestAnimationFrame(function () {
      redrawPending = false;
      renderer.draw(dragging || orbit.moved ? currentCamera() : initialCamera);
    });
  }

  canvas.addEventListener("mousedown", function (event) {
    dragging = true;
    lastPointer = { left: event.clientX, top: event.clientY };
    canvas.style.cursor = "grabbing";
  });

  window.addEventListener("mouseup", function () {
    dragging = false;
    canvas.style.cursor = "grab";
  });

  window.addEventListener("mousemove", function (event) {
    if (!dragging) {
      return;
    }
    var deltaLeft = event.clientX - lastPointer.left;
    var deltaTop = event.clientY - lastPointer.top;
    lastPointer = { left: event.clientX, top: event.clientY };
    orbit.azimuth -= deltaLeft * 0.01;
    orbit.elevation = Math.max(-elevationLimit, Math.min(elevationLimit, orbit.elevation + deltaTop * 0.01));
    orbit.moved = true;
    requestRedraw();
  });

  canvas.addEventListener("wheel", function (event) {
    event.preventDefault();
    var zoomFactor = event.deltaY > 0 ? 1.1 : 1 / 1.1;
    orbit.distance = Math.max(initialCamera.near * 2, orbit.distance * zoomFactor);
    orbit.moved = true;
    requestRedraw();
  }, { passive: false });

  window.addEventListener("resize", requestRedraw);
  requestRedraw();
})();
