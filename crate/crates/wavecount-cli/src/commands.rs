//! One handler per subcommand; each returns a [`CommandOutput`] or a usage
//! error message (exit code 2).

use serde_json::{json, Value};

use wavecount::degrees::Degrees;
use wavecount::ehrhart::{accumulate, compare_with_reference, ehrhart_count, ehrhart_poly_part};
use wavecount::numtheory::gcd;
use wavecount::poly::Var;
use wavecount::rational::rat_int;
use wavecount::spectral::{
    closed_form_degeneracy, degeneracy_range, heat_kernel_coeffs, invariants, midpoint_combination,
    molien_series, weyl_reference_signed, BoundaryCondition, MidpointSource, TilingSpec, WeylSign,
};
use wavecount::verify::{run_suite, Suite};
use wavecount::waves::{
    check_reciprocity, denumerant_brute, denumerant_series_range, popoviciu, popoviciu_gcd,
    WaveDecomposition,
};

use crate::render::{approx_str, poly_json, rational_str, CommandOutput, Status};
use crate::{
    DenumArgs, EhrhartArgs, HeatkArgs, MolienArgs, TilingArgs, VerifyArgs, WavesArgs, WeylArgs,
};

type CmdResult = Result<CommandOutput, String>;

fn parse_degrees(entries: &[u32]) -> Result<Degrees, String> {
    Degrees::new(entries.to_vec()).map_err(|e| e.to_string())
}

/// Worker cap for range evaluations: WAVECOUNT_THREADS if set, otherwise the
/// machine's available parallelism.
fn thread_cap() -> usize {
    std::env::var("WAVECOUNT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Apply `f` to every level in lo..=hi, in parallel when worthwhile; the
/// output order is by level regardless of scheduling.
fn map_levels<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync,
{
    let n = (hi - lo + 1).max(0) as usize;
    let workers = thread_cap().min(n.max(1));
    if workers <= 1 || n < 128 {
        return (lo..=hi).map(f).collect();
    }
    let chunk = n.div_ceil(workers);
    let mut chunks: Vec<Vec<T>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                let start = lo + (w * chunk) as i64;
                let end = (start + chunk as i64 - 1).min(hi);
                scope.spawn(move || (start..=end).map(f).collect::<Vec<T>>())
            })
            .collect();
        for h in handles {
            chunks.push(h.join().expect("worker panicked"));
        }
    });
    chunks.into_iter().flatten().collect()
}

pub fn denum(args: DenumArgs, _approx: Option<u32>) -> CmdResult {
    let degrees = parse_degrees(&args.degrees.0)?;
    let (lo, hi) = (args.l.lo, args.l.hi);
    let pair = match degrees.entries() {
        [d1, d2] => Some((*d1, *d2)),
        _ => None,
    };
    let want_brute = matches!(args.method, crate::Method::All | crate::Method::Brute);
    let want_series = matches!(args.method, crate::Method::All | crate::Method::Series);
    let want_pop = match args.method {
        crate::Method::Popoviciu => {
            if pair.is_none() {
                return Err("--method popoviciu needs exactly two degrees".into());
            }
            if lo < 0 {
                return Err("--method popoviciu needs l >= 0".into());
            }
            true
        }
        crate::Method::All => pair.is_some() && lo >= 0,
        _ => false,
    };

    let brute = want_brute.then(|| map_levels(lo, hi, |l| denumerant_brute(&degrees, l)));
    let series = want_series.then(|| {
        let table = denumerant_series_range(&degrees, hi);
        (lo..=hi)
            .map(|l| if l < 0 { 0 } else { table[l as usize] })
            .collect::<Vec<u64>>()
    });
    let pop = if want_pop {
        let (d1, d2) = pair.expect("checked above");
        let column = if gcd(d1 as u64, d2 as u64) == 1 {
            (lo..=hi)
                .map(|l| popoviciu(d1, d2, l).map_err(|e| e.to_string()))
                .collect::<Result<Vec<u64>, String>>()?
        } else {
            (lo..=hi).map(|l| popoviciu_gcd(d1, d2, l)).collect()
        };
        Some(column)
    } else {
        None
    };

    let columns: Vec<(&str, &Vec<u64>)> = [
        ("brute", brute.as_ref()),
        ("series", series.as_ref()),
        ("popoviciu", pop.as_ref()),
    ]
    .into_iter()
    .filter_map(|(name, col)| col.map(|c| (name, c)))
    .collect();
    if columns.is_empty() {
        return Err("no applicable method".into());
    }
    let agree = columns.windows(2).all(|pair| pair[0].1 == pair[1].1);

    let mut header = vec!["l".to_string()];
    header.extend(columns.iter().map(|(name, _)| name.to_string()));
    let rows: Vec<Vec<String>> = (lo..=hi)
        .enumerate()
        .map(|(i, l)| {
            let mut row = vec![l.to_string()];
            row.extend(columns.iter().map(|(_, col)| col[i].to_string()));
            row
        })
        .collect();

    let json_rows: Vec<Value> = (lo..=hi)
        .enumerate()
        .map(|(i, l)| {
            let mut obj = json!({ "l": l });
            for (name, col) in &columns {
                obj[*name] = json!(col[i]);
            }
            obj
        })
        .collect();

    Ok(CommandOutput {
        command: "denum",
        inputs: json!({
            "degrees": degrees.entries(),
            "l": { "lo": lo, "hi": hi },
            "method": format!("{:?}", args.method).to_lowercase(),
        }),
        results: json!({
            "methods": columns.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
            "rows": json_rows,
            "agree": agree,
        }),
        status: if agree {
            Status::Ok
        } else {
            Status::VerificationFailed
        },
        prelude: vec![
            ("degrees".into(), degrees.to_string()),
            ("levels".into(), format!("{lo}..{hi}")),
        ],
        header,
        rows,
    })
}

pub fn waves(args: WavesArgs, approx: Option<u32>) -> CmdResult {
    let degrees = parse_degrees(&args.degrees.0)?;
    let var = match args.var.as_str() {
        "l" => Var::L,
        "lbar" => Var::LBar,
        other => return Err(format!("--var must be l or lbar, got {other:?}")),
    };
    let decomposition = WaveDecomposition::of(&degrees);
    let report = check_reciprocity(&decomposition);
    let (w1, w2) = match var {
        Var::L => (
            decomposition
                .w1
                .shift_into(&decomposition.lbar_shift, Var::L),
            decomposition
                .w2
                .shift_into(&decomposition.lbar_shift, Var::L),
        ),
        _ => (decomposition.w1.clone(), decomposition.w2.clone()),
    };

    let degree_count = w1.coeffs().len().max(w2.coeffs().len());
    let header = vec!["power".to_string(), "w1".to_string(), "w2".to_string()];
    let rows: Vec<Vec<String>> = (0..degree_count)
        .map(|k| {
            vec![
                k.to_string(),
                rational_str(&w1.coeff(k)),
                rational_str(&w2.coeff(k)),
            ]
        })
        .collect();

    Ok(CommandOutput {
        command: "waves",
        inputs: json!({
            "degrees": degrees.entries(),
            "var": var.name(),
        }),
        results: json!({
            "lbar_shift": rational_str(&decomposition.lbar_shift),
            "w1": poly_json(&w1, approx),
            "w2": poly_json(&w2, approx),
            "w2_sign_factor": "(-1)^l",
            "even_degrees": decomposition.even_degrees,
            "odd_degrees": decomposition.odd_degrees,
            "parity_ok": report.pass(),
        }),
        status: Status::Ok,
        prelude: vec![
            ("degrees".into(), degrees.to_string()),
            (
                "lbar".into(),
                format!("l + {}", rational_str(&decomposition.lbar_shift)),
            ),
            ("W1".into(), w1.to_string()),
            ("W2".into(), format!("{w2}   (multiplied by (-1)^l)")),
            (
                "parity".into(),
                if report.pass() {
                    "pass".into()
                } else {
                    "FAIL".to_string()
                },
            ),
        ],
        header,
        rows,
    })
}

pub fn ehrhart(args: EhrhartArgs, approx: Option<u32>) -> CmdResult {
    let degrees = parse_degrees(&args.degrees.0)?;
    let part = ehrhart_poly_part(&degrees);
    let comparison = compare_with_reference(&degrees).ok();

    let mut results = json!({
        "lbar_shift": rational_str(&part.lbar_shift),
        "poly_l": poly_json(&part.poly_l, approx),
        "poly_lbar": poly_json(&part.poly_lbar, approx),
    });
    let mut prelude = vec![
        ("degrees".into(), degrees.to_string()),
        ("poly(l)".into(), part.poly_l.to_string()),
        (
            "poly(lbar)".into(),
            format!(
                "{}   with lbar = l + {}",
                part.poly_lbar,
                rational_str(&part.lbar_shift)
            ),
        ),
    ];

    let (header, rows);
    if let Some(range) = args.l {
        if range.lo < 0 {
            return Err("counts need l >= 0".into());
        }
        let counts: Vec<u64> = (range.lo..=range.hi)
            .map(|l| ehrhart_count(&degrees, l))
            .collect();
        let accumulated: Vec<u64> = (range.lo..=range.hi)
            .map(|l| accumulate(&degrees, l))
            .collect();
        let agree = counts == accumulated;
        results["counts"] = Value::Array(
            (range.lo..=range.hi)
                .enumerate()
                .map(|(i, l)| json!({ "l": l, "count": counts[i] }))
                .collect(),
        );
        results["count_paths_agree"] = json!(agree);
        header = vec![
            "l".to_string(),
            "count".to_string(),
            "accumulate".to_string(),
        ];
        rows = (range.lo..=range.hi)
            .enumerate()
            .map(|(i, l)| {
                vec![
                    l.to_string(),
                    counts[i].to_string(),
                    accumulated[i].to_string(),
                ]
            })
            .collect();
        if !agree {
            return Ok(CommandOutput {
                command: "ehrhart",
                inputs: json!({ "degrees": degrees.entries(), "l": { "lo": range.lo, "hi": range.hi } }),
                results,
                status: Status::VerificationFailed,
                prelude,
                header,
                rows,
            });
        }
    } else if let Some(cmp) = &comparison {
        header = vec![
            "power".to_string(),
            "computed".to_string(),
            "reference".to_string(),
            "difference".to_string(),
        ];
        rows = cmp
            .iter()
            .map(|row| {
                vec![
                    row.power.to_string(),
                    rational_str(&row.computed),
                    rational_str(&row.reference),
                    rational_str(&row.difference),
                ]
            })
            .collect();
    } else {
        header = vec![
            "power".to_string(),
            "poly_l".to_string(),
            "poly_lbar".to_string(),
        ];
        rows = (0..part
            .poly_l
            .coeffs()
            .len()
            .max(part.poly_lbar.coeffs().len()))
            .map(|k| {
                vec![
                    k.to_string(),
                    rational_str(&part.poly_l.coeff(k)),
                    rational_str(&part.poly_lbar.coeff(k)),
                ]
            })
            .collect();
    }

    if let Some(cmp) = &comparison {
        results["comparison"] = Value::Array(
            cmp.iter()
                .map(|row| {
                    json!({
                        "power": row.power,
                        "computed": rational_str(&row.computed),
                        "reference": rational_str(&row.reference),
                        "difference": rational_str(&row.difference),
                    })
                })
                .collect(),
        );
        prelude.push((
            "note".into(),
            "the reference polynomial uses a different splitting convention; only \
             the top two coefficients are convention-independent"
                .into(),
        ));
    }

    let inputs = match args.l {
        Some(range) => {
            json!({ "degrees": degrees.entries(), "l": { "lo": range.lo, "hi": range.hi } })
        }
        None => json!({ "degrees": degrees.entries() }),
    };
    Ok(CommandOutput {
        command: "ehrhart",
        inputs,
        results,
        status: Status::Ok,
        prelude,
        header,
        rows,
    })
}

pub fn tiling(args: TilingArgs, _approx: Option<u32>) -> CmdResult {
    let spec = TilingSpec::by_name(&args.name).map_err(|e| e.to_string())?;
    let bc: BoundaryCondition = args.bc.parse()?;
    if args.lmax < 0 {
        return Err("--lmax must be nonnegative".into());
    }
    let degeneracies = degeneracy_range(&spec, bc, args.lmax);
    let closed: Option<Vec<wavecount::Rational>> = if bc == BoundaryCondition::Periodic {
        Some(
            (0..=args.lmax)
                .map(|l| closed_form_degeneracy(spec.name(), l).expect("catalog name"))
                .collect(),
        )
    } else {
        None
    };
    let agree = closed.as_ref().map(|cf| {
        cf.iter()
            .zip(&degeneracies)
            .all(|(c, &d)| *c == rat_int(d as i64))
    });

    let mut header = vec!["l".to_string(), "degeneracy".to_string()];
    if closed.is_some() {
        header.push("closed_form".to_string());
    }
    let rows: Vec<Vec<String>> = (0..=args.lmax as usize)
        .map(|l| {
            let mut row = vec![l.to_string(), degeneracies[l].to_string()];
            if let Some(cf) = &closed {
                row.push(rational_str(&cf[l]));
            }
            row
        })
        .collect();

    let mut results = json!({
        "name": spec.name(),
        "degrees": spec.degrees().entries(),
        "dim": spec.dim(),
        "a_neumann": rational_str(&spec.a_neumann()),
        "a_dirichlet": rational_str(&spec.a_dirichlet()),
        "d0": spec.dirichlet_shift(),
        "bc": bc.to_string(),
        "degeneracies": degeneracies,
    });
    if let Some(axes) = spec.axis_orders() {
        results["axis_orders"] = json!(axes);
    }
    if let Some(agree) = agree {
        results["closed_form_agrees"] = json!(agree);
    }

    Ok(CommandOutput {
        command: "tiling",
        inputs: json!({ "name": args.name, "bc": bc.to_string(), "lmax": args.lmax }),
        results,
        status: match agree {
            Some(false) => Status::VerificationFailed,
            _ => Status::Ok,
        },
        prelude: vec![
            ("tiling".into(), spec.name().to_string()),
            ("degrees".into(), spec.degrees().to_string()),
            ("bc".into(), bc.to_string()),
        ],
        header,
        rows,
    })
}

pub fn molien(args: MolienArgs, _approx: Option<u32>) -> CmdResult {
    let spec = match (&args.name, &args.degrees) {
        (Some(name), None) => TilingSpec::by_name(name).map_err(|e| e.to_string())?,
        (None, Some(degrees)) => {
            let d = parse_degrees(&degrees.0)?;
            TilingSpec::custom("custom", d)
        }
        _ => return Err("exactly one of --name or --degrees is required".into()),
    };
    let bc: BoundaryCondition = args.bc.parse()?;
    let series = molien_series(&spec, bc, args.order);
    let axis_series = if bc == BoundaryCondition::Periodic {
        spec.molien_axes(args.order).ok()
    } else {
        None
    };
    let agree = axis_series.as_ref().map(|a| *a == series);

    let mut header = vec!["k".to_string(), "coefficient".to_string()];
    if axis_series.is_some() {
        header.push("axis_form".to_string());
    }
    let rows: Vec<Vec<String>> = (0..=args.order)
        .map(|k| {
            let mut row = vec![k.to_string(), rational_str(&series.coeff(k))];
            if let Some(a) = &axis_series {
                row.push(rational_str(&a.coeff(k)));
            }
            row
        })
        .collect();

    let mut results = json!({
        "name": spec.name(),
        "degrees": spec.degrees().entries(),
        "bc": bc.to_string(),
        "order": args.order,
        "series": series.coeffs().iter().map(rational_str).collect::<Vec<_>>(),
    });
    if let Some(a) = &axis_series {
        results["axis_series"] = json!(a.coeffs().iter().map(rational_str).collect::<Vec<_>>());
        results["axis_orders"] = json!(spec.axis_orders().expect("axes exist"));
    }
    if let Some(agree) = agree {
        results["axis_agrees"] = json!(agree);
    }

    Ok(CommandOutput {
        command: "molien",
        inputs: json!({
            "name": args.name,
            "degrees": args.degrees.as_ref().map(|d| d.0.clone()),
            "order": args.order,
            "bc": bc.to_string(),
        }),
        results,
        status: match agree {
            Some(false) => Status::VerificationFailed,
            _ => Status::Ok,
        },
        prelude: vec![
            ("tiling".into(), spec.name().to_string()),
            ("degrees".into(), spec.degrees().to_string()),
            ("bc".into(), bc.to_string()),
        ],
        header,
        rows,
    })
}

pub fn weyl(args: WeylArgs, approx: Option<u32>) -> CmdResult {
    let degrees = parse_degrees(&args.degrees.0)?;
    let sign = match args.sign.as_str() {
        "neumann" => WeylSign::Neumann,
        "dirichlet" => WeylSign::Dirichlet,
        other => {
            return Err(format!(
                "--sign must be neumann or dirichlet, got {other:?}"
            ))
        }
    };
    let weyl = weyl_reference_signed(&degrees, sign);
    let inv = invariants(&degrees);
    let mid_computed =
        midpoint_combination(&degrees, MidpointSource::Computed).map_err(|e| e.to_string())?;
    let mid_reference = midpoint_combination(&degrees, MidpointSource::Reference).ok();

    let mut results = json!({
        "degrees": degrees.entries(),
        "sign": args.sign,
        "weyl": poly_json(&weyl, approx),
        "invariants": {
            "two_g": inv.two_g.to_string(),
            "b1": inv.b1,
            "b2": inv.b2.as_ref().map(|b| b.to_string()),
        },
        "midpoint_computed": poly_json(&mid_computed, approx),
    });
    if let Some(r) = &mid_reference {
        results["midpoint_reference"] = poly_json(r, approx);
    }
    // gap between the midpoint combinations and the counting-function terms
    let d = degrees.count();
    if d >= 1 {
        results["omega_coeff_gap_computed"] = json!(rational_str(
            &(mid_computed.coeff(d - 1) - weyl.coeff(d - 1))
        ));
        if let Some(r) = &mid_reference {
            results["omega_coeff_gap_reference"] =
                json!(rational_str(&(r.coeff(d - 1) - weyl.coeff(d - 1))));
        }
    }

    let mut header = vec![
        "power".to_string(),
        "weyl".to_string(),
        "midpoint_computed".to_string(),
    ];
    if mid_reference.is_some() {
        header.push("midpoint_reference".to_string());
    }
    let rows: Vec<Vec<String>> = (0..=d)
        .map(|k| {
            let mut row = vec![
                k.to_string(),
                rational_str(&weyl.coeff(k)),
                rational_str(&mid_computed.coeff(k)),
            ];
            if let Some(r) = &mid_reference {
                row.push(rational_str(&r.coeff(k)));
            }
            row
        })
        .collect();

    Ok(CommandOutput {
        command: "weyl",
        inputs: json!({ "degrees": degrees.entries(), "sign": args.sign }),
        results,
        status: Status::Ok,
        prelude: vec![
            ("degrees".into(), degrees.to_string()),
            ("weyl".into(), weyl.to_string()),
            ("midpoint(computed)".into(), mid_computed.to_string()),
        ],
        header,
        rows,
    })
}

pub fn heatk(args: HeatkArgs, approx: Option<u32>) -> CmdResult {
    let degrees = parse_degrees(&args.degrees.0)?;
    let expansion = heat_kernel_coeffs(&degrees);

    let header = vec![
        "power".to_string(),
        "index".to_string(),
        "value".to_string(),
    ];
    let rows: Vec<Vec<String>> = expansion
        .coeffs
        .iter()
        .map(|c| {
            vec![
                c.power.to_string(),
                rational_str(&c.index),
                c.value.to_string(),
            ]
        })
        .collect();

    let coeff_json: Vec<Value> = expansion
        .coeffs
        .iter()
        .map(|c| {
            let mut obj = json!({
                "power": c.power,
                "index": rational_str(&c.index),
                "rational": rational_str(&c.value.coefficient),
                "sqrt_pi": c.value.sqrt_pi,
                "text": c.value.to_string(),
            });
            if let Some(k) = approx {
                obj["approx_non_authoritative"] = json!(approx_str(&c.value.coefficient, k));
            }
            obj
        })
        .collect();

    Ok(CommandOutput {
        command: "heatk",
        inputs: json!({ "degrees": degrees.entries() }),
        results: json!({
            "degrees": degrees.entries(),
            "wave_poly": poly_json(&expansion.wave_poly, approx),
            "coefficients": coeff_json,
        }),
        status: Status::Ok,
        prelude: vec![
            ("degrees".into(), degrees.to_string()),
            ("P(omega)".into(), expansion.wave_poly.to_string()),
        ],
        header,
        rows,
    })
}

pub fn verify(args: VerifyArgs) -> CmdResult {
    let suite: Suite = args.suite.parse()?;
    let checks = run_suite(suite, args.seed);
    let failed = checks.iter().filter(|c| !c.passed).count();

    let header = vec![
        "check".to_string(),
        "result".to_string(),
        "detail".to_string(),
    ];
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                if c.passed {
                    "pass".into()
                } else {
                    "FAIL".to_string()
                },
                c.detail.clone(),
            ]
        })
        .collect();

    Ok(CommandOutput {
        command: "verify",
        inputs: json!({ "suite": args.suite, "seed": args.seed }),
        results: json!({
            "checks": checks.iter().map(|c| {
                json!({ "name": c.name, "passed": c.passed, "detail": c.detail })
            }).collect::<Vec<_>>(),
            "total": checks.len(),
            "failed": failed,
        }),
        status: if failed == 0 {
            Status::Ok
        } else {
            Status::VerificationFailed
        },
        prelude: vec![
            ("suite".into(), args.suite.clone()),
            ("seed".into(), args.seed.to_string()),
        ],
        header,
        rows,
    })
}
