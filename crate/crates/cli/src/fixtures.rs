//! Canonical matrix fixtures written by `emit-fixtures`.

use std::path::{Path, PathBuf};

use realqm::dynamics::pauli_generators;
use realqm::format::{write_complex_matrix, write_real_matrix};
use realqm::interferometer::{beamsplitter, mirror, unnormalized_beamsplitter};
use realqm::superselection::{commutant_basis, universal_not};
use realqm::{j_operator, realify_op, ComplexMatrix};

use crate::CliError;

/// File name and contents of every fixture, in a fixed order.
///
/// All real-format fixtures except `universal_not.json` realify a complex
/// matrix; `pauli_y_complex.json` exercises the complex format.
pub fn matrix_fixtures() -> Vec<(&'static str, String)> {
    let [g0, gx, gy, gz] = pauli_generators();
    let [c0, cx, cy, cz] = commutant_basis();
    vec![
        ("generator_identity.json", write_real_matrix(&g0)),
        ("generator_sigma_x.json", write_real_matrix(&gx)),
        ("generator_sigma_y.json", write_real_matrix(&gy)),
        ("generator_sigma_z.json", write_real_matrix(&gz)),
        ("beamsplitter_unnormalized.json", write_real_matrix(&realify_op(&unnormalized_beamsplitter()))),
        ("mirror.json", write_real_matrix(mirror().real_form())),
        ("beamsplitter.json", write_real_matrix(beamsplitter().real_form())),
        ("universal_not.json", write_real_matrix(&universal_not())),
        ("j2.json", write_real_matrix(&j_operator(2))),
        ("commutant_i.json", write_real_matrix(&c0)),
        ("commutant_i_sigma_x.json", write_real_matrix(&cx)),
        ("commutant_i_sigma_y.json", write_real_matrix(&cy)),
        ("commutant_i_sigma_z.json", write_real_matrix(&cz)),
        ("pauli_y_complex.json", write_complex_matrix(&ComplexMatrix::pauli_y())),
    ]
}

/// Writes [`matrix_fixtures`] into `dir`, creating it if needed.
pub fn emit_matrix_fixtures(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_owned(), source })?;
    matrix_fixtures()
        .into_iter()
        .map(|(name, contents)| {
            let path = dir.join(name);
            std::fs::write(&path, contents).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(path)
        })
        .collect()
}
