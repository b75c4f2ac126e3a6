// Scene description captured when the script was interpreted.
// Every mesh is stored fully triangulated; positions and normals are flat x, y, z lists
// and matrices are column-major. Edit the values here to tweak the exported scene.
var sceneDocument = @SCENE_DOCUMENT@;
