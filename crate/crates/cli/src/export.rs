use std::io::Write;

use serde_json::Value;
use susyanyon::anyon::{fusion_basis, fusion_basis_json, AnyonKind, AnyonModel};
use susyanyon::braidrep::{braid_generators, generators_json, BraidParameters};
use susyanyon::bridge::{correspondence_csv, CorrespondenceRegistry};
use susyanyon::susy::{ModelParams, ModelRegistry};
use susyanyon::zeromodes::product_zero_modes;

use crate::args::{require, ExportArgs, ExportObject};
use crate::{CliError, Verdict};

pub fn run(a: &ExportArgs) -> Result<Verdict, CliError> {
    let text = render(a)?;
    match &a.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(Verdict::Pass)
}

fn json_text(v: &Value) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v).map_err(susyanyon::Error::from)? + "\n")
}

fn render(a: &ExportArgs) -> Result<String, CliError> {
    match a.object {
        ExportObject::FusionBasis => {
            let model = AnyonModel::builtin(AnyonKind::from_name(
                a.model.as_deref().unwrap_or("fibonacci"),
            )?);
            let outcome = match &a.outcome {
                Some(label) => model.species_index(label)?,
                None => model.generator(),
            };
            let basis = fusion_basis(&model, require(a.n, "n")?, outcome)?;
            json_text(&fusion_basis_json(&model, &basis))
        }
        ExportObject::ZeroModes => {
            let params = match a.sis {
                Some((n, r)) => ModelParams {
                    n: Some(n),
                    r: Some(r),
                    ..ModelParams::default()
                },
                None => ModelParams::default(),
            };
            let model = ModelRegistry::builtin()
                .create(a.model.as_deref().unwrap_or("qubit-fib"), &params)?;
            let labels = model.local().labels();
            let states = product_zero_modes(model.as_ref(), require(a.n, "n")?)?;
            json_text(&Value::Array(
                states
                    .iter()
                    .map(|s| Value::String(s.render(&labels)))
                    .collect(),
            ))
        }
        ExportObject::Generators => {
            let params = BraidParameters::fibonacci(a.branch)?;
            json_text(&generators_json(&braid_generators(
                require(a.n, "n")?,
                &params,
            )?))
        }
        ExportObject::Correspondence => {
            let corr = CorrespondenceRegistry::builtin()
                .create(a.model.as_deref().unwrap_or("fibonacci"))?;
            // N anyons correspond to N - 1 chain sites.
            let sites = match (a.sites, a.n) {
                (Some(s), _) => s,
                (None, Some(n)) if n >= 2 => n - 1,
                (None, Some(n)) => {
                    return Err(CliError::Usage(format!("need at least 2 anyons, got {n}")))
                }
                (None, None) => {
                    return Err(CliError::Usage("--n or --sites is required here".into()))
                }
            };
            Ok(correspondence_csv(corr.as_ref(), sites)?)
        }
    }
}
