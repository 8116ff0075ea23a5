//! Frequency-profile strings: `constant:omega=1`, `resonance:k=0.02`,
//! `ramp:omega-i=1,omega-f=2,t0=0,duration=10[,samples=129]`, and
//! `file:PATH` where PATH holds two-column `t omega` lines.

use std::fs;

use singosc::mode::FrequencyProfile;

use crate::CliError;

const RAMP_DEFAULT_SAMPLES: usize = 129;

pub fn parse_profile(spec: &str) -> Result<FrequencyProfile, CliError> {
    let Some((kind, rest)) = spec.split_once(':') else {
        return Err(CliError::Usage(format!(
            "profile {spec}: expected KIND:ARGS, e.g. constant:omega=1"
        )));
    };
    match kind {
        "constant" => {
            let mut kv = KeyValues::parse(spec, rest)?;
            let omega = kv.require("omega")?;
            kv.finish()?;
            Ok(FrequencyProfile::constant(omega)?)
        }
        "resonance" => {
            let mut kv = KeyValues::parse(spec, rest)?;
            let k = kv.require("k")?;
            kv.finish()?;
            Ok(FrequencyProfile::parametric_resonance(k)?)
        }
        "ramp" => {
            let mut kv = KeyValues::parse(spec, rest)?;
            let omega_i = kv.require("omega-i")?;
            let omega_f = kv.require("omega-f")?;
            let t0 = kv.require("t0")?;
            let duration = kv.require("duration")?;
            let samples = match kv.take("samples") {
                None => RAMP_DEFAULT_SAMPLES,
                Some(raw) => raw.parse().map_err(|e| {
                    CliError::Usage(format!("profile {spec}: samples={raw}: {e}"))
                })?,
            };
            kv.finish()?;
            Ok(FrequencyProfile::smooth_ramp(
                omega_i, omega_f, t0, duration, samples,
            )?)
        }
        "file" => profile_from_table(rest),
        other => Err(CliError::Usage(format!(
            "unknown profile kind {other}; use constant, resonance, ramp, or file"
        ))),
    }
}

/// Default integration start: a table starts where it is defined, the
/// closed-form profiles at t = 0.
pub fn natural_start(profile: &FrequencyProfile) -> f64 {
    match profile {
        FrequencyProfile::Tabulated { times, .. } => times[0],
        _ => 0.0,
    }
}

/// Comma-separated key=value arguments of one profile spec.
struct KeyValues<'a> {
    spec: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> KeyValues<'a> {
    fn parse(spec: &'a str, rest: &'a str) -> Result<Self, CliError> {
        let mut pairs = Vec::new();
        for part in rest.split(',') {
            let Some((key, value)) = part.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "profile {spec}: expected key=value, got {part}"
                )));
            };
            pairs.push((key.trim(), value.trim()));
        }
        Ok(KeyValues { spec, pairs })
    }

    fn take(&mut self, key: &str) -> Option<&'a str> {
        let i = self.pairs.iter().position(|(k, _)| *k == key)?;
        Some(self.pairs.remove(i).1)
    }

    fn require(&mut self, key: &str) -> Result<f64, CliError> {
        let Some(raw) = self.take(key) else {
            return Err(CliError::Usage(format!(
                "profile {}: missing {key}",
                self.spec
            )));
        };
        raw.parse()
            .map_err(|e| CliError::Usage(format!("profile {}: {key}={raw}: {e}", self.spec)))
    }

    fn finish(self) -> Result<(), CliError> {
        if let Some((key, _)) = self.pairs.first() {
            return Err(CliError::Usage(format!(
                "profile {}: unknown key {key}",
                self.spec
            )));
        }
        Ok(())
    }
}

/// Two-column `t omega` table, whitespace or comma separated, # comments.
fn profile_from_table(path: &str) -> Result<FrequencyProfile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read profile table {path}: {e}")))?;
    let mut times = Vec::new();
    let mut omega_sq = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty());
        let (Some(t), Some(w), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(CliError::Usage(format!(
                "profile table {path} line {}: expected `t omega`, got {raw}",
                lineno + 1
            )));
        };
        let parse = |name: &str, field: &str| -> Result<f64, CliError> {
            field.parse().map_err(|e| {
                CliError::Usage(format!(
                    "profile table {path} line {}: {name}={field}: {e}",
                    lineno + 1
                ))
            })
        };
        times.push(parse("t", t)?);
        let w = parse("omega", w)?;
        omega_sq.push(w * w);
    }
    Ok(FrequencyProfile::tabulated(times, omega_sq)?)
}
