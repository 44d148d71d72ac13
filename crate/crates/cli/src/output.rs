use serde::Serialize;

/// 17 significant digits in scientific notation; round-trips every `f64`.
/// `-0.0` is folded to `0.0` so equal runs stay byte-identical.
pub fn fmt_num(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

pub(crate) fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub(crate) fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports contain only finite numbers and strings");
    s.push('\n');
    s
}

/// Two-column table with the keys left-aligned to the widest key.
pub(crate) fn text_table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip_with_17_digits() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::f64::consts::PI] {
            let s = fmt_num(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let digits = s.split('e').next().unwrap().chars().filter(char::is_ascii_digit).count();
            assert_eq!(digits, 17, "{s}");
        }
        assert_eq!(fmt_num(-0.0), fmt_num(0.0));
    }

    #[test]
    fn table_alignment() {
        let t = text_table(&[("a".into(), "1".into()), ("long key".into(), "2".into())]);
        assert_eq!(t, "a         1\nlong key  2\n");
    }
}
