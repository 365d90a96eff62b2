//! Browser bindings. Every function takes plain strings and returns a JSON
//! string; errors come back as a JS exception with the message.

use serde_json::json;
use wasm_bindgen::prelude::*;

use minuscule::error::Error;
use minuscule::exact::Rational;
use minuscule::roots::{RootSystem, RootSystemLabel};
use minuscule::verify::triangle::seeded_pair;
use minuscule::verify::{triangle_witness, Triangle};
use minuscule::weyl::{orbit, orbit_partition, stabilizer_simple_roots};

// Orbits beyond this would stall the page.
const WEB_ORBIT_CAP: usize = 20_000;

fn err(e: Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn system(label: &str) -> Result<RootSystem, Error> {
    RootSystem::build(label.parse::<RootSystemLabel>()?)
}

pub fn info_json(label: &str) -> Result<String, Error> {
    Ok(system(label)?.info().to_string())
}

pub fn orbit_json(label: &str, vector: &str, coweight: &str) -> Result<String, Error> {
    let sys = system(label)?;
    let v = sys.resolve_vector(vector)?;
    let cw = sys.coweight(coweight)?;
    let orb = orbit(sys.simple_roots(), &v, WEB_ORBIT_CAP)?;
    let part = orbit_partition(&stabilizer_simple_roots(&sys, &cw.vector)?, &orb.to_vec())?;
    let mut blocks: Vec<_> = part
        .as_sets()
        .into_iter()
        .map(|b| {
            let first = b.iter().next().expect("nonempty block");
            json!({
                "size": b.len(),
                "pairing": first.dot(&cw.vector),
                "representative": first,
            })
        })
        .collect();
    blocks.sort_by(|x, y| x["size"].as_u64().cmp(&y["size"].as_u64()));
    Ok(json!({
        "label": sys.label(),
        "base": v,
        "coweight": cw.name,
        "size": orb.len(),
        "blocks": blocks,
    })
    .to_string())
}

pub fn triangle_json(label: &str, coweight: &str, seed: u64, sides: Option<[&str; 4]>) -> Result<String, Error> {
    let sys = system(label)?;
    let (t, t2) = match sides {
        None => seeded_pair(&sys, &sys.coweight(coweight)?.vector, seed)?,
        Some([a, b, a2, b2]) => (
            Triangle::new(sys.resolve_vector(a)?, sys.resolve_vector(b)?),
            Triangle::new(sys.resolve_vector(a2)?, sys.resolve_vector(b2)?),
        ),
    };
    let w = triangle_witness(&sys, &t, &t2)?;
    let q = |x: &minuscule::exact::Vector| x.dot(x) / Rational::from_integer(2);
    Ok(json!({
        "label": sys.label(),
        "t": t,
        "t2": t2,
        "word": w,
        "q": [q(&t.a), q(&t.b), q(&t.c)],
    })
    .to_string())
}

/// Roots, simple roots, highest root and minuscule coweights.
#[wasm_bindgen]
pub fn root_system_info(label: &str) -> Result<String, JsValue> {
    info_json(label).map_err(err)
}

/// The `W`-orbit of `vector` split into orbits of the stabilizer of `coweight`.
#[wasm_bindgen]
pub fn orbit_blocks(label: &str, vector: &str, coweight: &str) -> Result<String, JsValue> {
    orbit_json(label, vector, coweight).map_err(err)
}

/// A random conjugate pair of triangles and a word relating them.
#[wasm_bindgen]
pub fn random_triangle_witness(label: &str, coweight: &str, seed: u32) -> Result<String, JsValue> {
    triangle_json(label, coweight, seed as u64, None).map_err(err)
}

/// A word `w` with `w (a2, b2, -a2-b2) = (a, b, -a-b)`.
#[wasm_bindgen]
pub fn triangle_witness_for(label: &str, a: &str, b: &str, a2: &str, b2: &str) -> Result<String, JsValue> {
    triangle_json(label, "", 0, Some([a, b, a2, b2])).map_err(err)
}
