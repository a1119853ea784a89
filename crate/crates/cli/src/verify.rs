use susyanyon::anyon::{hexagon_check, pentagon_check, AnyonKind, AnyonModel, Orientation};
use susyanyon::braidrep::{braid_generators, verify_braid_rep, BraidParameters};
use susyanyon::bridge::{verify_correspondence, verify_lifted, CorrespondenceRegistry};
use susyanyon::report::VerificationReport;
use susyanyon::susy::{verify_susy, ModelParams, ModelRegistry};

use crate::args::{Format, Scope, VerifyArgs};
use crate::{CliError, Verdict};

const DEFAULT_TOL: f64 = 1e-9;
/// The lifted generators pass through a numerical kernel basis.
const LIFTED_TOL: f64 = 1e-8;

pub fn run(a: &VerifyArgs) -> Result<Verdict, CliError> {
    let report = build(a)?;
    let text = match a.format {
        Format::Pretty => report.to_pretty(),
        Format::Csv => report.to_csv(),
        Format::Json => {
            serde_json::to_string_pretty(&report).map_err(susyanyon::Error::from)? + "\n"
        }
    };
    print!("{text}");
    Ok(Verdict::from_bool(report.passed()))
}

fn build(a: &VerifyArgs) -> Result<VerificationReport, CliError> {
    let tol = a.tol.unwrap_or(match a.scope {
        Scope::Lifted => LIFTED_TOL,
        _ => DEFAULT_TOL,
    });
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let params = BraidParameters::fibonacci(a.branch)?;
    Ok(match a.scope {
        Scope::Susy => {
            let p = match a.sis {
                Some((n, r)) => ModelParams {
                    n: Some(n),
                    r: Some(r),
                    ..ModelParams::default()
                },
                None => ModelParams::default(),
            };
            let model = ModelRegistry::builtin().create(&a.model, &p)?;
            verify_susy(model.as_ref(), a.n, tol)?
        }
        Scope::Braid => {
            let rep = braid_generators(a.n, &params)?;
            let mut r = verify_braid_rep(&rep, tol);
            for (name, residual) in params.relation_residuals() {
                r.check(name, residual, tol);
            }
            r
        }
        Scope::Lifted => verify_lifted(a.n, &params, tol)?,
        Scope::Pentagon => {
            let model = AnyonModel::builtin(AnyonKind::Fibonacci);
            let fr = params.fr_data();
            let p = pentagon_check(&model, &fr)?;
            let mut r = VerificationReport::new(format!("Fibonacci pentagon, branch {}", a.branch));
            r.check("pentagon", p.max_residual, tol);
            r.check("F unitarity", fr.f_unitarity_residual(&model)?, tol);
            r.note(format!("{} label tuples", p.tuples_checked));
            r
        }
        Scope::Hexagon => {
            let model = AnyonModel::builtin(AnyonKind::Fibonacci);
            let fr = params.fr_data();
            let mut r = VerificationReport::new(format!("Fibonacci hexagon, branch {}", a.branch));
            for (name, o) in [
                ("hexagon RFR = FRF", Orientation::Over),
                ("hexagon, inverse R", Orientation::Under),
            ] {
                let h = hexagon_check(&model, &fr, o)?;
                r.check(name, h.max_residual, tol);
                r.note(format!("{name}: {} label tuples", h.tuples_checked));
            }
            r
        }
        Scope::Correspondence => {
            let corr = CorrespondenceRegistry::builtin().create(&a.model)?;
            verify_correspondence(corr.as_ref(), a.n)?
        }
    })
}
