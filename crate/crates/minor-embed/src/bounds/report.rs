//! Ordered key-value report documents, diffable across runs.

use std::fmt;

/// An ordered key-value document. Floats render with 15 significant digits
/// (IEEE round-half-even), integers and rationals exactly.
#[derive(Clone, Debug, Default)]
pub struct BoundsReport {
    title: String,
    entries: Vec<(String, String)>,
}

impl BoundsReport {
    pub fn new(title: impl Into<String>) -> Self {
        BoundsReport { title: title.into(), entries: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn push_f64(&mut self, key: impl Into<String>, value: f64) {
        self.entries.push((key.into(), format!("{value:.14e}")));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_f64(&self, key: &str) -> Option<f64> {
        self.get(key).and_then(|v| v.parse().ok())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report: {}", self.title)?;
        for (k, v) in &self.entries {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_stable_and_ordered() {
        let mut r = BoundsReport::new("t");
        r.push("alpha", 3);
        r.push_f64("beta", 0.1);
        let text = r.to_string();
        assert_eq!(text, "report: t\nalpha: 3\nbeta: 1.00000000000000e-1\n");
        assert_eq!(r.get_f64("beta"), Some(0.1));
    }
}
