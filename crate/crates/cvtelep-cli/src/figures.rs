//! Data tables behind the standard figures: entropy curves, fidelity
//! comparisons at fixed phase, optimized Bell-angle gains, non-Gaussianity,
//! and squeezed-vacuum affinity.

use std::f64::consts::{FRAC_PI_4, PI};

use cvtelep::{
    delta_closed_form, entanglement_entropy, fidelity, non_gaussianity, optimize_delta,
    vacuum_affinity, InputSpec, ResourceSpec, SqueezeParam,
};
use num_complex::Complex64 as C64;
use serde_json::{json, Value};

use crate::CliError;

const STEP: f64 = 0.01;
const BETA: f64 = 0.3;
const S_IN: f64 = 0.8;

pub struct FigureTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
    pub meta: Value,
}

pub fn build(id: &str) -> Result<FigureTable, CliError> {
    match id {
        "fig1" => fig1(),
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig4" => fig4(),
        "fig5" => fig5(),
        "fig6" => fig6(),
        "fig7_deltaF" => fig7_delta_f(),
        "fig8" => fig8(),
        "fig9_affinity" => fig9_affinity(),
        other => Err(CliError::Config(format!(
            "unknown figure id {other:?}; expected fig1, fig2, fig3, fig4, fig5, fig6, \
             fig7_deltaF, fig8, or fig9_affinity"
        ))),
    }
}

fn grid(max: f64) -> Vec<f64> {
    let n = (max / STEP).round() as usize;
    (0..=n).map(|i| i as f64 * STEP).collect()
}

fn zeta(r: f64) -> Result<SqueezeParam, CliError> {
    Ok(SqueezeParam::new(r, PI)?)
}

fn inputs() -> Vec<InputSpec> {
    vec![
        InputSpec::Coherent { beta: C64::new(BETA, 0.0) },
        InputSpec::SqueezedVacuum { s: S_IN, varphi: 0.0 },
        InputSpec::Fock1,
        InputSpec::PhotonAddedCoherent { beta: C64::new(BETA, 0.0) },
        InputSpec::SqueezedFock1 { s: S_IN, varphi: 0.0 },
    ]
}

fn comparison_resources(z: SqueezeParam) -> [ResourceSpec; 4] {
    [
        ResourceSpec::TwinBeam { zeta: z },
        ResourceSpec::SqueezedNumber { zeta: z },
        ResourceSpec::PhotonAdded { zeta: z },
        ResourceSpec::PhotonSubtracted { zeta: z },
    ]
}

const COMPARISON_LABELS: [&str; 4] =
    ["squeezed state", "squeezed number", "photon-added", "photon-subtracted"];

fn headers(first: &str, rest: &[String]) -> Vec<String> {
    let mut cols = vec![first.to_string()];
    cols.extend(rest.iter().cloned());
    cols
}

fn fig1() -> Result<FigureTable, CliError> {
    let mut rows = Vec::new();
    for &r in &grid(1.5) {
        let z = zeta(r)?;
        rows.push(vec![
            Some(r),
            Some(entanglement_entropy(&ResourceSpec::SqueezedNumber { zeta: z })?),
            Some(entanglement_entropy(&ResourceSpec::PhotonAdded { zeta: z })?),
            Some(entanglement_entropy(&ResourceSpec::TwinBeam { zeta: z })?),
        ]);
    }
    Ok(FigureTable {
        headers: headers(
            "r",
            &["squeezed number", "photon-added/subtracted", "twin-beam"].map(String::from),
        ),
        rows,
        meta: json!({
            "id": "fig1",
            "quantity": "entanglement entropy",
            "phi": "pi",
            "r_grid": "0:1.5:0.01",
        }),
    })
}

fn fig2() -> Result<FigureTable, CliError> {
    let sections = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0];
    let mut rows = Vec::new();
    for &delta in &grid(PI) {
        let mut row = vec![Some(delta)];
        for &r in &sections {
            let spec = ResourceSpec::SqueezedBell { zeta: zeta(r)?, delta, theta: 0.0 };
            row.push(Some(entanglement_entropy(&spec)?));
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: headers(
            "delta",
            &["r=0", "r=0.2", "r=0.4", "r=0.6", "r=0.8", "r=1"].map(String::from),
        ),
        rows,
        meta: json!({
            "id": "fig2",
            "quantity": "entanglement entropy of the squeezed Bell family",
            "phi": "pi",
            "theta": 0,
            "delta_grid": "0:pi:0.01",
            "sections_r": sections,
        }),
    })
}

fn fidelity_panels(
    id: &str,
    panel_inputs: &[InputSpec],
    tags: &[&str],
) -> Result<FigureTable, CliError> {
    let mut columns = Vec::new();
    for tag in tags {
        for label in COMPARISON_LABELS {
            columns.push(format!("{label} [{tag}]"));
        }
    }
    let mut rows = Vec::new();
    for &r in &grid(1.5) {
        let specs = comparison_resources(zeta(r)?);
        let mut row = vec![Some(r)];
        for input in panel_inputs {
            for spec in &specs {
                row.push(Some(fidelity(input, spec)?.value));
            }
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: headers("r", &columns),
        rows,
        meta: json!({
            "id": id,
            "quantity": "teleportation fidelity",
            "phi": "pi",
            "r_grid": "0:1.5:0.01",
            "panels": panel_inputs.iter().map(|i| i.label()).collect::<Vec<_>>(),
            "beta": BETA,
            "s": S_IN,
            "method": "closed-form",
        }),
    })
}

fn fig3() -> Result<FigureTable, CliError> {
    let panels = [
        InputSpec::Coherent { beta: C64::new(BETA, 0.0) },
        InputSpec::SqueezedVacuum { s: S_IN, varphi: 0.0 },
    ];
    fidelity_panels("fig3", &panels, &["I", "II"])
}

fn fig4() -> Result<FigureTable, CliError> {
    let panels = [
        InputSpec::Fock1,
        InputSpec::PhotonAddedCoherent { beta: C64::new(BETA, 0.0) },
        InputSpec::SqueezedFock1 { s: S_IN, varphi: 0.0 },
    ];
    fidelity_panels("fig4", &panels, &["I", "II", "III"])
}

fn fig5() -> Result<FigureTable, CliError> {
    let ins = inputs();
    let mut rows = Vec::new();
    for &r in &grid(1.5) {
        let spec = ResourceSpec::SqueezedBell { zeta: zeta(r)?, delta: FRAC_PI_4, theta: 0.0 };
        let mut row = vec![Some(r)];
        for input in &ins {
            row.push(Some(fidelity(input, &spec)?.value));
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: headers(
            "r",
            &ins.iter().map(|i| i.label().to_string()).collect::<Vec<_>>(),
        ),
        rows,
        meta: json!({
            "id": "fig5",
            "quantity": "teleportation fidelity with the balanced squeezed Bell resource",
            "phi": "pi",
            "delta": "pi/4",
            "theta": 0,
            "r_grid": "0:1.5:0.01",
            "beta": BETA,
            "s": S_IN,
            "method": "closed-form",
        }),
    })
}

fn fig6() -> Result<FigureTable, CliError> {
    let ins = inputs();
    let mut rows = Vec::new();
    for &r in &grid(1.5) {
        let z = zeta(r)?;
        let mut row = vec![Some(r)];
        for input in &ins {
            row.push(Some(optimize_delta(input, z, 0.0)?.fidelity_star));
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: headers(
            "r",
            &ins.iter().map(|i| i.label().to_string()).collect::<Vec<_>>(),
        ),
        rows,
        meta: json!({
            "id": "fig6",
            "quantity": "fidelity maximized over the Bell angle",
            "phi": "pi",
            "theta": 0,
            "r_grid": "0:1.5:0.01",
            "beta": BETA,
            "s": S_IN,
        }),
    })
}

fn fig7_delta_f() -> Result<FigureTable, CliError> {
    let ins = inputs();
    let mut columns = Vec::new();
    for tag in ["I", "II"] {
        for input in &ins {
            columns.push(format!("{} [{tag}]", input.label()));
        }
    }
    let mut rows = Vec::new();
    for &r in &grid(1.5) {
        let z = zeta(r)?;
        let tb = ResourceSpec::TwinBeam { zeta: z };
        let pss = ResourceSpec::PhotonSubtracted { zeta: z };
        let mut opt = Vec::with_capacity(ins.len());
        for input in &ins {
            opt.push(optimize_delta(input, z, 0.0)?.fidelity_star);
        }
        let mut row = vec![Some(r)];
        for (input, &fopt) in ins.iter().zip(&opt) {
            row.push(Some(fopt - fidelity(input, &tb)?.value));
        }
        for (input, &fopt) in ins.iter().zip(&opt) {
            row.push(Some(fopt - fidelity(input, &pss)?.value));
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: headers("r", &columns),
        rows,
        meta: json!({
            "id": "fig7_deltaF",
            "quantity": "optimized fidelity minus reference-resource fidelity",
            "reference_panel_I": "twin beam",
            "reference_panel_II": "photon-subtracted",
            "phi": "pi",
            "theta": 0,
            "r_grid": "0:1.5:0.01",
            "beta": BETA,
            "s": S_IN,
        }),
    })
}

fn fig8() -> Result<FigureTable, CliError> {
    let dgrid = grid(PI);
    let rgrid = grid(1.5);
    let coherent = InputSpec::Coherent { beta: C64::new(BETA, 0.0) };
    let mut rows = Vec::new();
    for k in 0..dgrid.len().max(rgrid.len()) {
        let mut row = vec![None; 7];
        if let Some(&delta) = dgrid.get(k) {
            let spec = ResourceSpec::SqueezedBell { zeta: zeta(0.5)?, delta, theta: 0.0 };
            row[0] = Some(delta);
            row[1] = Some(non_gaussianity(&spec)?);
        }
        if let Some(&r) = rgrid.get(k) {
            let z = zeta(r)?;
            let dc = delta_closed_form(&coherent, r).expect("coherent input has a closed form");
            let df = delta_closed_form(&InputSpec::Fock1, r).expect("Fock input has a closed form");
            row[2] = Some(r);
            row[3] = Some(non_gaussianity(&ResourceSpec::SqueezedBell {
                zeta: z,
                delta: dc,
                theta: 0.0,
            })?);
            row[4] = Some(non_gaussianity(&ResourceSpec::SqueezedBell {
                zeta: z,
                delta: df,
                theta: 0.0,
            })?);
            row[5] = Some(non_gaussianity(&ResourceSpec::PhotonAdded { zeta: z })?);
            row[6] = Some(non_gaussianity(&ResourceSpec::PhotonSubtracted { zeta: z })?);
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: [
            "delta [I]",
            "squeezed Bell [I]",
            "r [II]",
            "squeezed Bell (coherent optimum) [II]",
            "squeezed Bell (Fock optimum) [II]",
            "photon-added [II]",
            "photon-subtracted [II]",
        ]
        .map(String::from)
        .to_vec(),
        rows,
        meta: json!({
            "id": "fig8",
            "quantity": "non-Gaussianity",
            "panel_I": "vs delta; independent of r, evaluated at r=0.5",
            "panel_II": "vs r at the optimized Bell angles, with degaussified references",
            "phi": "pi",
            "theta": 0,
            "delta_grid": "0:pi:0.01",
            "r_grid": "0:1.5:0.01",
        }),
    })
}

fn fig9_affinity() -> Result<FigureTable, CliError> {
    let coherent = InputSpec::Coherent { beta: C64::new(BETA, 0.0) };
    let mut rows = Vec::new();
    for &r in &grid(2.0) {
        let z = zeta(r)?;
        let dc = delta_closed_form(&coherent, r).expect("coherent input has a closed form");
        let df = delta_closed_form(&InputSpec::Fock1, r).expect("Fock input has a closed form");
        let specs = [
            ResourceSpec::SqueezedBell { zeta: z, delta: dc, theta: 0.0 },
            ResourceSpec::SqueezedBell { zeta: z, delta: df, theta: 0.0 },
            ResourceSpec::PhotonAdded { zeta: z },
            ResourceSpec::PhotonSubtracted { zeta: z },
            ResourceSpec::SqueezedNumber { zeta: z },
        ];
        let mut row = vec![Some(r)];
        for spec in &specs {
            row.push(Some(vacuum_affinity(spec).0));
        }
        rows.push(row);
    }
    Ok(FigureTable {
        headers: headers(
            "r",
            &[
                "squeezed Bell (coherent optimum)",
                "squeezed Bell (Fock optimum)",
                "photon-added",
                "photon-subtracted",
                "squeezed number",
            ]
            .map(String::from),
        ),
        rows,
        meta: json!({
            "id": "fig9_affinity",
            "quantity": "squeezed-vacuum affinity",
            "phi": "pi",
            "theta": 0,
            "r_grid": "0:2:0.01",
        }),
    })
}
