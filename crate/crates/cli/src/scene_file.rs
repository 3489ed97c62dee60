//! JSON scene files.
//!
//! ```json
//! {
//!   "separation": 1.0,
//!   "axis": "x",
//!   "objects": [{ "name": "Obj1", "vertices": [[0, 0], [2, 0], [0, 1.5]] }]
//! }
//! ```

use std::path::Path;

use proximity::benchmark::{default_scene, Scene};
use proximity::geometry::{Axis, Triangle};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneObject {
    pub name: String,
    /// Must hold exactly three `[x, y]` pairs.
    pub vertices: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub separation: f64,
    pub axis: Axis,
    pub objects: Vec<SceneObject>,
}

impl SceneFile {
    pub fn from_scene(scene: &Scene) -> Self {
        let objects = scene
            .objects()
            .iter()
            .enumerate()
            .map(|(i, t)| SceneObject {
                name: scene.name(i).to_owned(),
                vertices: t.vertices().iter().map(|p| [p.x, p.y]).collect(),
            })
            .collect();
        SceneFile {
            separation: scene.separation(),
            axis: scene.axis(),
            objects,
        }
    }

    /// Validates the document into a [`Scene`]. Errors name the offending
    /// object; `origin` only labels them.
    pub fn into_scene(self, origin: &Path) -> Result<Scene, CliError> {
        let mut tris = Vec::with_capacity(self.objects.len());
        for obj in self.objects {
            let coords: [[f64; 2]; 3] = obj.vertices.as_slice().try_into().map_err(|_| {
                CliError::input(
                    origin,
                    format!(
                        "object {:?} has {} vertices, expected 3",
                        obj.name,
                        obj.vertices.len()
                    ),
                )
            })?;
            let tri = Triangle::from_coords(coords)
                .map_err(|e| CliError::input(origin, format!("object {:?}: {e}", obj.name)))?;
            tris.push(tri.with_name(obj.name));
        }
        Scene::new(tris, self.separation, self.axis).map_err(|e| CliError::input(origin, e))
    }
}

pub fn parse_scene(text: &str, origin: &Path) -> Result<Scene, CliError> {
    let file: SceneFile = serde_json::from_str(text).map_err(|e| CliError::input(origin, e))?;
    file.into_scene(origin)
}

pub fn load_scene(path: &Path) -> Result<Scene, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(path, e))?;
    parse_scene(&text, path)
}

/// The built-in scene as a pretty-printed scene file.
pub fn export_default_scene() -> String {
    serde_json::to_string_pretty(&SceneFile::from_scene(&default_scene()))
        .expect("scene files always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Scene, CliError> {
        parse_scene(text, Path::new("test.json"))
    }

    #[test]
    fn default_export_round_trips() {
        let scene = parse(&export_default_scene()).unwrap();
        assert_eq!(scene, default_scene());
    }

    #[test]
    fn rejects_wrong_vertex_counts() {
        let text =
            r#"{"separation":1,"axis":"x","objects":[{"name":"a","vertices":[[0,0],[1,0]]}]}"#;
        let err = parse(text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("expected 3"));
    }

    #[test]
    fn rejects_duplicate_names_and_bad_axes() {
        let tri = r#"{"name":"a","vertices":[[0,0],[1,0],[0,1]]}"#;
        let dup = format!(r#"{{"separation":1,"axis":"y","objects":[{tri},{tri}]}}"#);
        assert!(parse(&dup).unwrap_err().to_string().contains("duplicate"));
        let axis = format!(r#"{{"separation":1,"axis":"z","objects":[{tri}]}}"#);
        assert_eq!(parse(&axis).unwrap_err().exit_code(), 2);
        assert!(parse("not json").is_err());
    }

    #[test]
    fn winding_is_normalized_on_load() {
        let text = r#"{"separation":0.5,"axis":"y","objects":[{"name":"cw","vertices":[[0,0],[0,1],[1,0]]}]}"#;
        let scene = parse(text).unwrap();
        assert!(scene.objects()[0].signed_area() > 0.0);
        assert_eq!(scene.axis(), Axis::Y);
    }
}
