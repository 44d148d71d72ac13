use std::f64::consts::{FRAC_PI_2, LN_2, PI, TAU};

use nalgebra::DVector;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use realqm::complex::I;
use realqm::dynamics::{larmor_experiment, precession_rates};
use realqm::entanglement::{encode_global, encode_local, entanglement_entropy};
use realqm::format::{parse_matrix, MatrixFile};
use realqm::indefinite_metric::{pair_constraint_kernel, FockToy, MIN_CUTOFF};
use realqm::interferometer::{
    beamsplitter, compose_real, identity_multiple, mach_zehnder_elements, mach_zehnder_unnormalized,
    mach_zehnder_with_phase, mach_zehnder_with_phase_real, mirror,
};
use realqm::sampling::{random_state, random_unitary};
use realqm::superselection::{audit as audit_operator, conjugation, Verdict};
use realqm::{realify_op, ComplexVector, RealOperator, RealState};

use crate::output::{csv, fmt_num, json, text_table};
use crate::{
    AuditArgs, CliError, Emitted, EntropyScanArgs, Format, GhostsArgs, LarmorArgs, LocalPhaseArgs, MziArgs,
};

pub(crate) const MAX_CUTOFF: usize = 24;
const MAX_GRID: usize = 100_000;

fn invalid<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Invalid(msg.into()))
}

fn finite(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() {
        Ok(x)
    } else {
        invalid(format!("{name} must be finite, got {x}"))
    }
}

fn grid_points(name: &str, n: usize) -> Result<usize, CliError> {
    if !(2..=MAX_GRID).contains(&n) {
        return invalid(format!("{name} must be between 2 and {MAX_GRID}, got {n}"));
    }
    Ok(n)
}

/// `n` equally spaced points from `lo` to `hi` inclusive.
fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

#[derive(Serialize)]
struct LarmorRow {
    t: f64,
    a_r: f64,
    a_i: f64,
    b_r: f64,
    b_i: f64,
    p0: f64,
    p1: f64,
}

#[derive(Serialize)]
struct LarmorReport {
    omega: f64,
    hbar: f64,
    tmax: f64,
    steps: usize,
    /// Mean rate of `arg(a·b*)`; absent when sampling is too coarse to unwrap.
    precession_rate: Option<f64>,
    records: Vec<LarmorRow>,
}

pub(crate) fn larmor(a: &LarmorArgs, format: Format) -> Result<Emitted, CliError> {
    if !(a.omega > 0.0 && a.omega.is_finite()) {
        return invalid(format!("--omega must be a finite number > 0, got {}", a.omega));
    }
    if !(a.tmax >= 0.0 && a.tmax.is_finite()) {
        return invalid(format!("--tmax must be a finite number >= 0, got {}", a.tmax));
    }
    if !(1..=MAX_GRID).contains(&a.steps) {
        return invalid(format!("--steps must be between 1 and {MAX_GRID}, got {}", a.steps));
    }
    let times: Vec<f64> = (0..=a.steps).map(|k| a.tmax * k as f64 / a.steps as f64).collect();
    let records = larmor_experiment(a.omega, &times)?;
    let dt = a.tmax / a.steps as f64;
    let precession_rate = (a.tmax > 0.0 && 2.0 * a.omega * dt < PI).then(|| {
        let rates = precession_rates(&records);
        rates.iter().sum::<f64>() / rates.len() as f64
    });

    let rows: Vec<LarmorRow> = records
        .iter()
        .map(|r| LarmorRow {
            t: r.t,
            a_r: r.state[0],
            a_i: r.state[1],
            b_r: r.state[2],
            b_i: r.state[3],
            p0: r.probabilities[0],
            p1: r.probabilities[1],
        })
        .collect();

    let mut notes = vec![
        "shipped sign convention, generator realify(-iH/hbar): a_i(t) = -sin(Ωt)/√2, b_i(t) = +sin(Ωt)/√2".into(),
        "opposite convention, generator realify(+iH/hbar) (time reversed): a_i(t) = +sin(Ωt)/√2, b_i(t) = -sin(Ωt)/√2"
            .into(),
    ];
    match precession_rate {
        Some(rate) => notes.push(format!(
            "relative phase arg(a·b*) rate {} (magnitude 2Ω = {})",
            fmt_num(rate),
            fmt_num(2.0 * a.omega)
        )),
        None => notes.push("precession rate not reported: sampling interval too coarse to unwrap".into()),
    }

    let body = match format {
        Format::Json => json(&LarmorReport {
            omega: a.omega,
            hbar: 1.0,
            tmax: a.tmax,
            steps: a.steps,
            precession_rate,
            records: rows,
        }),
        _ => csv(
            &["t", "a_r", "a_i", "b_r", "b_i", "p0", "p1"],
            rows.iter().map(|r| [r.t, r.a_r, r.a_i, r.b_r, r.b_i, r.p0, r.p1].map(fmt_num).to_vec()),
        ),
    };
    Ok(Emitted { body, notes })
}

#[derive(Serialize)]
struct Composite {
    /// `s` in `M ≈ s·I`, as `[re, im]`.
    multiple: [f64; 2],
    /// `‖M − s·I‖_F`.
    residual: f64,
    verdict: String,
}

impl Composite {
    fn new(s: Complex64, residual: f64) -> Self {
        Composite { multiple: [s.re + 0.0, s.im + 0.0], residual, verdict: identity_label(s, residual) }
    }
}

fn identity_label(s: Complex64, residual: f64) -> String {
    let scale = s.norm().max(1.0);
    if residual > 1e-12 * scale {
        return "not a multiple of I".into();
    }
    let k = s.re.round();
    if s.im.abs() <= 1e-12 * scale && (s.re - k).abs() <= 1e-12 * scale {
        return match k as i64 {
            1 => "I".into(),
            -1 => "-I".into(),
            k => format!("{k}I"),
        };
    }
    format!("({} + {}i)I", fmt_num(s.re), fmt_num(s.im))
}

fn real_identity_multiple(r: &RealOperator) -> (Complex64, f64) {
    let n = r.dim2();
    let s = (0..n).map(|k| r.get(k, k)).sum::<f64>() / n as f64;
    let residual = (r - &RealOperator::identity(n).scale(s)).frobenius_norm();
    (Complex64::new(s, 0.0), residual)
}

#[derive(Serialize)]
struct MziRow {
    phi: f64,
    p0: f64,
    p1: f64,
}

#[derive(Serialize)]
struct MziReport {
    normalized_complex: Composite,
    normalized_real: Composite,
    unnormalized_literal: Composite,
    /// `‖BS² − mirror‖_F` in the real representation.
    beamsplitter_squared_vs_mirror: f64,
    /// Largest difference between probabilities computed with complex and real matrices.
    real_complex_max_discrepancy: f64,
    records: Vec<MziRow>,
}

pub(crate) fn mzi(a: &MziArgs, format: Format) -> Result<Emitted, CliError> {
    let phis = match a.grid {
        Some(n) => linspace(0.0, TAU, grid_points("--grid", n)?),
        None => vec![finite("--phase", a.phase)?],
    };
    let elements = mach_zehnder_elements();
    let complex = realqm::interferometer::compose_complex(&elements);
    let (s, res) = identity_multiple(&complex);
    let normalized_complex = Composite::new(s, res);
    let (s, res) = real_identity_multiple(&compose_real(&elements));
    let normalized_real = Composite::new(s, res);
    let (s, res) = identity_multiple(&mach_zehnder_unnormalized());
    let unnormalized_literal = Composite::new(s, res);
    let bs = beamsplitter();
    let beamsplitter_squared_vs_mirror =
        (&(bs.real_form() * bs.real_form()) - mirror().real_form()).frobenius_norm();

    let mut discrepancy: f64 = 0.0;
    let records: Vec<MziRow> = phis
        .iter()
        .map(|&phi| {
            let c = mach_zehnder_with_phase(phi);
            let r = mach_zehnder_with_phase_real(phi);
            discrepancy = discrepancy.max((c.p0 - r.p0).abs()).max((c.p1 - r.p1).abs());
            MziRow { phi, p0: c.p0, p1: c.p1 }
        })
        .collect();

    let notes = vec![
        format!(
            "normalized composite: {} (complex), {} (real)",
            normalized_complex.verdict, normalized_real.verdict
        ),
        format!("unnormalized beamsplitter product: {}", unnormalized_literal.verdict),
        format!("real vs complex probability discrepancy {}", fmt_num(discrepancy)),
    ];
    let body = match format {
        Format::Json => json(&MziReport {
            normalized_complex,
            normalized_real,
            unnormalized_literal,
            beamsplitter_squared_vs_mirror,
            real_complex_max_discrepancy: discrepancy,
            records,
        }),
        _ => csv(&["phi", "p0", "p1"], records.iter().map(|r| [r.phi, r.p0, r.p1].map(fmt_num).to_vec())),
    };
    Ok(Emitted { body, notes })
}

#[derive(Serialize)]
struct EntropyRow {
    alpha: f64,
    beta: f64,
    det_rho1: f64,
    entropy_nats: f64,
    entropy_bits: f64,
    class: String,
}

#[derive(Serialize)]
struct EntropyScanReport {
    records: Vec<EntropyRow>,
}

pub(crate) fn entropy_scan(a: &EntropyScanArgs, format: Format) -> Result<Emitted, CliError> {
    let alphas = linspace(0.0, PI, grid_points("--alpha-points", a.alpha_points)?);
    let betas = linspace(0.0, FRAC_PI_2, grid_points("--beta-points", a.beta_points)?);
    let mut records = Vec::with_capacity(alphas.len() * betas.len());
    for &alpha in &alphas {
        for &beta in &betas {
            let (sb, cb) = beta.sin_cos();
            let (sa, ca) = alpha.sin_cos();
            let state = RealState::new(vec![cb, 0.0, ca * sb, sa * sb])?;
            let report = entanglement_entropy(&state)?;
            records.push(EntropyRow {
                alpha,
                beta,
                det_rho1: report.det_rho1,
                entropy_nats: report.entropy_nats,
                entropy_bits: report.entropy_bits(),
                class: report.class.to_string(),
            });
        }
    }
    let max_nats = records.iter().map(|r| r.entropy_nats).fold(0.0, f64::max);
    let notes = vec![format!(
        "largest entropy on the grid: {} nats = {} bits (bound ln 2 = 1 bit)",
        fmt_num(max_nats),
        fmt_num(max_nats / LN_2)
    )];
    let body = match format {
        Format::Json => json(&EntropyScanReport { records }),
        _ => csv(
            &["alpha", "beta", "det_rho1", "entropy_nats", "class"],
            records.iter().map(|r| {
                let mut row = [r.alpha, r.beta, r.det_rho1, r.entropy_nats].map(fmt_num).to_vec();
                row.push(r.class.clone());
                row
            }),
        ),
    };
    Ok(Emitted { body, notes })
}

#[derive(Serialize)]
struct MatrixAudit {
    mode: &'static str,
    source: String,
    dim2: usize,
    verdict: Verdict,
    linear_residual: f64,
    antilinear_residual: f64,
    commutator_norm: f64,
    threshold: f64,
    /// Row-major `[re, im]` entries of the complex matrix, for Physical operators.
    complex_form: Option<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct FamilyTally {
    family: &'static str,
    expected: Verdict,
    trials: usize,
    matched: usize,
    /// For Physical and AntiLinear: largest residual that must vanish, relative to `‖O‖_F`.
    /// For Extended: smallest of the two residuals, relative to `‖O‖_F`.
    relative_residual: f64,
}

#[derive(Serialize)]
struct RandomAudit {
    mode: &'static str,
    seed: u64,
    trials: usize,
    tol: f64,
    families: Vec<FamilyTally>,
}

pub(crate) fn audit(a: &AuditArgs, format: Format) -> Result<Emitted, CliError> {
    if !(a.tol > 0.0 && a.tol.is_finite()) {
        return invalid(format!("--tol must be a finite number > 0, got {}", a.tol));
    }
    match &a.matrix {
        Some(path) => audit_file(path, a.tol, format),
        None => audit_random(a, format),
    }
}

fn audit_file(path: &std::path::Path, tol: f64, format: Format) -> Result<Emitted, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    let op = match parse_matrix(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))? {
        MatrixFile::Real(r) => r,
        MatrixFile::Complex(c) => realify_op(&c),
    };
    let report = audit_operator(&op, tol);
    let out = MatrixAudit {
        mode: "matrix",
        source: path.display().to_string(),
        dim2: op.dim2(),
        verdict: report.verdict,
        linear_residual: report.linear_residual,
        antilinear_residual: report.antilinear_residual,
        commutator_norm: report.commutator_norm,
        threshold: report.threshold,
        complex_form: report
            .complex_form
            .as_ref()
            .map(|c| c.row_major().iter().map(|z| [z.re + 0.0, z.im + 0.0]).collect()),
    };
    let notes = vec![format!("{}: {}", out.source, out.verdict)];
    let body = match format {
        Format::Json => json(&out),
        _ => {
            let mut rows = vec![
                ("source".to_owned(), out.source.clone()),
                ("dim2".to_owned(), out.dim2.to_string()),
                ("verdict".to_owned(), out.verdict.to_string()),
                ("linear_residual".to_owned(), fmt_num(out.linear_residual)),
                ("antilinear_residual".to_owned(), fmt_num(out.antilinear_residual)),
                ("commutator_norm".to_owned(), fmt_num(out.commutator_norm)),
                ("threshold".to_owned(), fmt_num(out.threshold)),
            ];
            if let Some(c) = &out.complex_form {
                let n = (c.len() as f64).sqrt().round() as usize;
                for (k, z) in c.iter().enumerate() {
                    rows.push((
                        format!("complex_form[{},{}]", k / n, k % n),
                        format!("{} {}", fmt_num(z[0]), fmt_num(z[1])),
                    ));
                }
            }
            text_table(&rows)
        }
    };
    Ok(Emitted { body, notes })
}

fn audit_random(a: &AuditArgs, format: Format) -> Result<Emitted, CliError> {
    if !(1..=MAX_GRID).contains(&a.trials) {
        return invalid(format!("--trials must be between 1 and {MAX_GRID}, got {}", a.trials));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut families = [
        ("realified unitary", Verdict::Physical),
        ("realified unitary after conjugation", Verdict::AntiLinear),
        ("sum of the two", Verdict::Extended),
    ]
    .map(|(family, expected)| FamilyTally {
        family,
        expected,
        trials: a.trials,
        matched: 0,
        relative_residual: if expected == Verdict::Extended { f64::INFINITY } else { 0.0 },
    });
    for trial in 0..a.trials {
        let n = 1 + trial % 4;
        let u = realify_op(&random_unitary(&mut rng, n));
        let v = realify_op(&random_unitary(&mut rng, n));
        let anti = &v * &conjugation(n);
        let ops = [u.clone(), anti.clone(), &u + &anti];
        for (tally, op) in families.iter_mut().zip(ops.iter()) {
            let r = audit_operator(op, a.tol);
            let norm = op.frobenius_norm();
            if r.verdict == tally.expected {
                tally.matched += 1;
            }
            tally.relative_residual = match tally.expected {
                Verdict::Physical => tally.relative_residual.max(r.linear_residual / norm),
                Verdict::AntiLinear => tally.relative_residual.max(r.antilinear_residual / norm),
                Verdict::Extended => {
                    tally.relative_residual.min(r.linear_residual.min(r.antilinear_residual) / norm)
                }
            };
        }
    }
    let notes = families
        .iter()
        .map(|t| {
            let flag = if t.matched == t.trials { "" } else { " MISMATCH" };
            format!("{}: {}/{} audited {}{flag}", t.family, t.matched, t.trials, t.expected)
        })
        .collect();
    let out =
        RandomAudit { mode: "random", seed: a.seed, trials: a.trials, tol: a.tol, families: families.into() };
    let body = match format {
        Format::Json => json(&out),
        _ => {
            let mut rows = vec![
                ("seed".to_owned(), out.seed.to_string()),
                ("trials".to_owned(), out.trials.to_string()),
                ("tol".to_owned(), fmt_num(out.tol)),
            ];
            for t in &out.families {
                rows.push((
                    t.family.to_owned(),
                    format!(
                        "expected {}, matched {}/{}, relative residual {}",
                        t.expected,
                        t.matched,
                        t.trials,
                        fmt_num(t.relative_residual)
                    ),
                ));
            }
            text_table(&rows)
        }
    };
    Ok(Emitted { body, notes })
}

#[derive(Serialize)]
struct CommutatorDefects {
    /// `[a₀, a₀‡] + I` on the guarded subspace (max abs).
    scalar: f64,
    /// `[a₃, a₃‡] − I` on the guarded subspace.
    longitudinal: f64,
    /// `[a₃ − a₀, a₃‡ − a₀‡]` on the guarded subspace.
    constraint_emission: f64,
}

#[derive(Serialize)]
struct GhostPair {
    eta_norm: f64,
    constraint_residual: f64,
}

#[derive(Serialize)]
struct Emission {
    single_constraint_residual: f64,
    double_constraint_residual: f64,
    single_overlap_defect: f64,
    double_overlap_defect: f64,
    eta_norm_before: f64,
    eta_norm_after_double: f64,
}

#[derive(Serialize)]
struct PairQubits {
    kernel_dimension: usize,
    restricted_metric: Vec<f64>,
}

#[derive(Serialize)]
struct GhostsReport {
    cutoff: usize,
    guard: usize,
    lambda: f64,
    /// `⟨n₀|η|n₀⟩` for the scalar mode, `n₀ = 0..cutoff`.
    scalar_mode_norms: Vec<f64>,
    commutator_defects: CommutatorDefects,
    ghost_pair: GhostPair,
    emission: Emission,
    pair_qubits: PairQubits,
}

pub(crate) fn ghosts(a: &GhostsArgs, format: Format) -> Result<Emitted, CliError> {
    if !(MIN_CUTOFF..=MAX_CUTOFF).contains(&a.cutoff) {
        return invalid(format!("--cutoff must be between {MIN_CUTOFF} and {MAX_CUTOFF}, got {}", a.cutoff));
    }
    let lambda = finite("--lambda", a.lambda)?;
    let toy = FockToy::with_transverse(a.cutoff, 1)?;
    let n = toy.dim();
    let eta = |v: &DVector<f64>, w: &DVector<f64>| toy.eta_inner(v, w);

    let scalar_mode_norms = (0..a.cutoff)
        .map(|k| {
            let v = toy.basis_state(0, k);
            eta(&v, &v)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let comm = |x: &nalgebra::DMatrix<f64>, y: &nalgebra::DMatrix<f64>| x * y - y * x;
    let id = nalgebra::DMatrix::<f64>::identity(n, n);
    let zero = nalgebra::DMatrix::<f64>::zeros(n, n);
    let (c, e) = (toy.constraint_operator(), toy.emission_operator());
    let commutator_defects = CommutatorDefects {
        scalar: toy.guarded_defect(&comm(toy.a0(), toy.a0_dag()), &(-&id)),
        longitudinal: toy.guarded_defect(&comm(toy.a3(), toy.a3_dag()), &id),
        constraint_emission: toy.guarded_defect(&comm(c, e), &zero),
    };

    let vacuum = toy.vacuum();
    let pair = e * &vacuum;
    let ghost_pair =
        GhostPair { eta_norm: eta(&pair, &pair)?, constraint_residual: toy.gb_constraint_residual(&pair)? };

    let psi1 = &vacuum + &pair;
    let once = toy.ghost_emit(&vacuum, lambda)?;
    let twice = toy.ghost_emit(&once, lambda)?;
    let base = eta(&vacuum, &psi1)?;
    let emission = Emission {
        single_constraint_residual: toy.gb_constraint_residual(&once)?,
        double_constraint_residual: toy.gb_constraint_residual(&twice)?,
        single_overlap_defect: toy.overlap_invariance_check(&vacuum, &psi1, lambda)?,
        double_overlap_defect: (eta(&twice, &psi1)? - base).abs(),
        eta_norm_before: eta(&vacuum, &vacuum)?,
        eta_norm_after_double: eta(&twice, &twice)?,
    };

    let kernel = pair_constraint_kernel();
    let pair_qubits =
        PairQubits { kernel_dimension: kernel.basis.len(), restricted_metric: kernel.restricted_metric };
    let report = GhostsReport {
        cutoff: a.cutoff,
        guard: toy.guard(),
        lambda,
        scalar_mode_norms,
        commutator_defects,
        ghost_pair,
        emission,
        pair_qubits,
    };
    let notes = vec![format!(
        "commutator defects are max-abs entries over columns with occupations <= {}",
        report.guard
    )];
    let body = match format {
        Format::Json => json(&report),
        _ => ghosts_table(&report),
    };
    Ok(Emitted { body, notes })
}

fn ghosts_table(r: &GhostsReport) -> String {
    let mut rows = vec![
        ("cutoff".to_owned(), r.cutoff.to_string()),
        ("guard".to_owned(), r.guard.to_string()),
        ("lambda".to_owned(), fmt_num(r.lambda)),
    ];
    for (k, v) in r.scalar_mode_norms.iter().enumerate() {
        rows.push((format!("scalar_mode_norm[{k}]"), fmt_num(*v)));
    }
    let d = &r.commutator_defects;
    let e = &r.emission;
    for (k, v) in [
        ("commutator_defect.scalar", d.scalar),
        ("commutator_defect.longitudinal", d.longitudinal),
        ("commutator_defect.constraint_emission", d.constraint_emission),
        ("ghost_pair.eta_norm", r.ghost_pair.eta_norm),
        ("ghost_pair.constraint_residual", r.ghost_pair.constraint_residual),
        ("emission.single_constraint_residual", e.single_constraint_residual),
        ("emission.double_constraint_residual", e.double_constraint_residual),
        ("emission.single_overlap_defect", e.single_overlap_defect),
        ("emission.double_overlap_defect", e.double_overlap_defect),
        ("emission.eta_norm_before", e.eta_norm_before),
        ("emission.eta_norm_after_double", e.eta_norm_after_double),
    ] {
        rows.push((k.to_owned(), fmt_num(v)));
    }
    rows.push(("pair_qubits.kernel_dimension".to_owned(), r.pair_qubits.kernel_dimension.to_string()));
    rows.push((
        "pair_qubits.restricted_metric".to_owned(),
        r.pair_qubits.restricted_metric.iter().map(|&x| fmt_num(x)).collect::<Vec<_>>().join(" "),
    ));
    text_table(&rows)
}

#[derive(Serialize)]
struct PhaseRow {
    trial: usize,
    local_distance: f64,
    global_distance: f64,
}

#[derive(Serialize)]
struct LocalPhaseReport {
    seed: u64,
    trials: usize,
    /// Distance for `ψ = φ = |0⟩`; `√2`.
    basis_example_local_distance: f64,
    min_local_distance: f64,
    max_global_distance: f64,
    records: Vec<PhaseRow>,
}

/// Distances between the encodings of `(iψ, φ)` and `(ψ, iφ)`.
fn phase_distances(psi: &ComplexVector, phi: &ComplexVector) -> Result<(f64, f64), CliError> {
    let (ipsi, iphi) = (psi.scale(I), phi.scale(I));
    let local = encode_local(&ipsi, phi)?.distance(&encode_local(psi, &iphi)?);
    let global = encode_global(&ipsi, phi)?.distance(&encode_global(psi, &iphi)?);
    Ok((local, global))
}

pub(crate) fn local_phase_demo(a: &LocalPhaseArgs, format: Format) -> Result<Emitted, CliError> {
    if !(1..=MAX_GRID).contains(&a.trials) {
        return invalid(format!("--trials must be between 1 and {MAX_GRID}, got {}", a.trials));
    }
    let zero = ComplexVector::basis(2, 0);
    let (basis_example_local_distance, _) = phase_distances(&zero, &zero)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let records = (0..a.trials)
        .map(|trial| {
            let psi = random_state(&mut rng, 2);
            let phi = random_state(&mut rng, 2);
            let (local_distance, global_distance) = phase_distances(&psi, &phi)?;
            Ok(PhaseRow { trial, local_distance, global_distance })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let min_local_distance = records.iter().map(|r| r.local_distance).fold(f64::INFINITY, f64::min);
    let max_global_distance = records.iter().map(|r| r.global_distance).fold(0.0, f64::max);
    let notes = vec![
        format!("ψ = φ = |0⟩: local distance {}", fmt_num(basis_example_local_distance)),
        format!(
            "random pairs: smallest local distance {}, largest global distance {}",
            fmt_num(min_local_distance),
            fmt_num(max_global_distance)
        ),
    ];
    let body = match format {
        Format::Json => json(&LocalPhaseReport {
            seed: a.seed,
            trials: a.trials,
            basis_example_local_distance,
            min_local_distance,
            max_global_distance,
            records,
        }),
        _ => csv(
            &["trial", "local_distance", "global_distance"],
            records
                .iter()
                .map(|r| vec![r.trial.to_string(), fmt_num(r.local_distance), fmt_num(r.global_distance)]),
        ),
    };
    Ok(Emitted { body, notes })
}
