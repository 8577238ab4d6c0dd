//! Grayscale maps of triangle classes as binary PGM.
//!
//! Pixel `(row = a, col = b)` shows the class of `(a, b, c)` for a fixed `c`.

use crate::error::{Error, Result};
use crate::triangle::{classify_triple, TriangleClass};
use crate::Natural;

/// Default largest `k` for a `2^k x 2^k` image.
pub const DEFAULT_MAX_RENDER_K: u32 = 12;

/// Gray level per class. Levels must be pairwise distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Palette {
    pub flat: u8,
    pub tight: u8,
    pub loose: u8,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            flat: 255,
            tight: 170,
            loose: 85,
        }
    }
}

impl Palette {
    pub fn level(&self, class: TriangleClass) -> u8 {
        match class {
            TriangleClass::Flat => self.flat,
            TriangleClass::Tight => self.tight,
            TriangleClass::Loose => self.loose,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.flat != self.tight && self.tight != self.loose && self.flat != self.loose
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub k: u32,
    pub fixed_c: Natural,
    pub palette: Palette,
}

impl RenderSpec {
    pub fn new(k: u32, fixed_c: impl Into<Natural>) -> Self {
        RenderSpec {
            k,
            fixed_c: fixed_c.into(),
            palette: Palette::default(),
        }
    }

    pub fn side(&self) -> usize {
        1 << self.k
    }
}

/// Row-major gray levels, `2^k` rows of `2^k` pixels.
pub fn render_pixels(spec: &RenderSpec, max_k: u32) -> Result<Vec<u8>> {
    let cap = max_k.min(31);
    if spec.k > cap {
        return Err(Error::CapExceeded {
            what: "render width k",
            requested: spec.k.to_string(),
            cap: cap as u64,
        });
    }
    assert!(
        spec.palette.is_injective(),
        "palette levels must be distinct"
    );
    let side = spec.side();
    let values: Vec<Natural> = (0..side).map(Natural::from).collect();
    let mut pixels = Vec::with_capacity(side * side);
    for a in &values {
        for b in &values {
            let class = classify_triple(a, b, &spec.fixed_c).class;
            pixels.push(spec.palette.level(class));
        }
    }
    Ok(pixels)
}

/// Binary PGM: `P5\n<w> <h>\n255\n` followed by the raw pixel bytes.
pub fn render_pgm(spec: &RenderSpec) -> Result<Vec<u8>> {
    render_pgm_with_cap(spec, DEFAULT_MAX_RENDER_K)
}

pub fn render_pgm_with_cap(spec: &RenderSpec, max_k: u32) -> Result<Vec<u8>> {
    let pixels = render_pixels(spec, max_k)?;
    let side = spec.side();
    let mut out = format!("P5\n{side} {side}\n255\n").into_bytes();
    out.extend_from_slice(&pixels);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER_2X2: &[u8] = b"P5\n2 2\n255\n";

    #[test]
    fn two_by_two_c0() {
        let bytes = render_pgm(&RenderSpec::new(1, 0u32)).unwrap();
        assert_eq!(&bytes[..HEADER_2X2.len()], HEADER_2X2);
        assert_eq!(&bytes[HEADER_2X2.len()..], &[255, 85, 85, 255]);
    }

    #[test]
    fn two_by_two_c1() {
        let bytes = render_pgm(&RenderSpec::new(1, 1u32)).unwrap();
        assert_eq!(&bytes[HEADER_2X2.len()..], &[85, 255, 255, 170]);
    }

    #[test]
    fn single_pixel() {
        let bytes = render_pgm(&RenderSpec::new(0, 0u32)).unwrap();
        assert_eq!(bytes, b"P5\n1 1\n255\n\xff");
    }

    #[test]
    fn cap() {
        assert!(matches!(
            render_pgm(&RenderSpec::new(13, 0u32)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(render_pixels(&RenderSpec::new(2, 0u32), 1).is_err());
        assert!(render_pixels(&RenderSpec::new(2, 0u32), 2).is_ok());
    }
}
