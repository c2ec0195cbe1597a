//! Short names for standard basis diagrams, as in `12e21` for
//! `H_1 H_2 e H_2 H_1`.

use crate::diagram::{triple_decompose, BrauerDiagram};

fn push_index(out: &mut String, i: usize) {
    if i < 10 {
        out.push(char::from(b'0' + i as u8));
    } else {
        out.push_str(&format!("[{i}]"));
    }
}

/// `w1 e_(k) wd w2` written as reduced words around `e` (or `e(k)`);
/// the identity is `0`.
pub fn diagram_label(d: &BrauerDiagram) -> String {
    let t = triple_decompose(d);
    let mut out = String::new();
    for i in t.omega1.reduced_word() {
        push_index(&mut out, i);
    }
    match t.k {
        0 => {}
        1 => out.push('e'),
        k => out.push_str(&format!("e({k})")),
    }
    for i in t.omega_d.reduced_word().into_iter().chain(t.omega2.reduced_word()) {
        push_index(&mut out, i);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parse a label back to its diagram together with the number of
/// generator letters it names (counting `e(k)` as zero).
pub fn parse_label(s: &str, n: usize) -> Result<(BrauerDiagram, usize), String> {
    let mut d = BrauerDiagram::identity(n);
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut letters = 0;
    if s == "0" {
        return Ok((d, 0));
    }
    if s.is_empty() {
        return Err("empty label".into());
    }
    while i < bytes.len() {
        match bytes[i] {
            b'1'..=b'9' => {
                let g = (bytes[i] - b'0') as usize;
                if g >= n {
                    return Err(format!("generator {g} out of range for n = {n}"));
                }
                d = d.concat(&BrauerDiagram::simple(n, g)).0;
                letters += 1;
                i += 1;
            }
            b'[' => {
                let end = s[i..].find(']').ok_or("unclosed '['")? + i;
                let g: usize = s[i + 1..end].parse().map_err(|_| "bad generator index")?;
                if g == 0 || g >= n {
                    return Err(format!("generator {g} out of range for n = {n}"));
                }
                d = d.concat(&BrauerDiagram::simple(n, g)).0;
                letters += 1;
                i = end + 1;
            }
            b'e' => {
                let mut k = 1;
                if bytes.get(i + 1) == Some(&b'(') {
                    let end = s[i..].find(')').ok_or("unclosed '('")? + i;
                    k = s[i + 2..end].parse().map_err(|_| "bad e(k) index")?;
                    i = end + 1;
                } else {
                    i += 1;
                }
                if k == 0 || 2 * k > n {
                    return Err(format!("e({k}) out of range for n = {n}"));
                }
                d = d.concat(&BrauerDiagram::e_k(n, k)).0;
            }
            c => return Err(format!("unexpected '{}' in label", c as char)),
        }
    }
    Ok((d, letters))
}
