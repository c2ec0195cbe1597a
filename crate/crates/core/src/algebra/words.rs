use crate::diagram::{triple_decompose, BrauerDiagram};

use super::engine::Letter;

/// Parse a generator word such as `H1*H2*e*H2^-1*e(2)`.
pub fn parse_word(s: &str, n: usize) -> Result<Vec<Letter>, String> {
    let mut out = Vec::new();
    for tok in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let letter = if tok == "e" {
            Letter::E
        } else if let Some(rest) = tok.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
            let k: usize = rest.parse().map_err(|_| format!("bad token '{tok}'"))?;
            if k == 0 || 2 * k > n {
                return Err(format!("e({k}) out of range for n = {n}"));
            }
            Letter::Ek(k)
        } else if let Some(rest) = tok.strip_prefix('H') {
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            let (idx, inv) = match rest.split_once('^') {
                Some((i, "-1")) | Some((i, "{-1}")) => (i, true),
                Some(_) => return Err(format!("bad exponent in '{tok}'")),
                None => (rest, false),
            };
            let i: usize = idx.parse().map_err(|_| format!("bad token '{tok}'"))?;
            if i == 0 || i >= n {
                return Err(format!("H{i} out of range for n = {n}"));
            }
            if inv {
                Letter::HInv(i)
            } else {
                Letter::H(i)
            }
        } else {
            return Err(format!("bad token '{tok}'"));
        };
        out.push(letter);
    }
    if out.is_empty() {
        return Err("empty word".into());
    }
    Ok(out)
}

/// Replace every `e(k)` by `e H_{2,2k-1}^+ H_{1,2k-2}^- e_(k-1)`, leaving
/// only `H_i`, `H_i^-1` and `e`.
pub fn expand_letters(word: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::new();
    for &l in word {
        match l {
            Letter::Ek(k) => push_ek(&mut out, k),
            other => out.push(other),
        }
    }
    out
}

fn push_ek(out: &mut Vec<Letter>, k: usize) {
    for j in (1..=k).rev() {
        out.push(Letter::E);
        if j > 1 {
            out.extend((2..=2 * j - 1).map(Letter::H));
            out.extend((1..=2 * j - 2).map(Letter::HInv));
        }
    }
}

/// `H_d` as the word `H_w1 e_(k) H_wd H_w2` in the generators.
pub fn basis_word(d: &BrauerDiagram) -> Vec<Letter> {
    let t = triple_decompose(d);
    let mut out: Vec<Letter> = t.omega1.reduced_word().into_iter().map(Letter::H).collect();
    if t.k > 0 {
        push_ek(&mut out, t.k);
    }
    out.extend(t.omega_d.reduced_word().into_iter().map(Letter::H));
    out.extend(t.omega2.reduced_word().into_iter().map(Letter::H));
    out
}
