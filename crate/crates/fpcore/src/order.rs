//! Monomial orders and their packed comparison keys.
//!
//! Every order here is encoded as a 16-byte big-endian key so that comparing
//! two monomials is a single `u128` comparison. Larger key = larger monomial.
//!
//! * Graded reverse lexicographic: key = (weighted degree as `u16`, then
//!   `255 − e_{n−1}, …, 255 − e_0`). Ties in degree are broken by the
//!   *smallest* trailing exponents winning, which is exactly grevlex.
//! * Lexicographic: key = (`e_0, …, e_{n−1}`), no degree prefix.
//! * Block elimination order: the first `k` variables form block one, the rest
//!   block two; keys are (deg₁, grevlex bytes of block 1, deg₂, grevlex bytes
//!   of block 2). Any monomial containing a block-one variable sorts above
//!   every monomial free of them, so a Gröbner basis in this order eliminates
//!   the first block.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::monomial::Monomial;

/// A term order on monomials in `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (by weighted degree).
    GrevLex,
    /// Pure lexicographic, `x_0 > x_1 > …`.
    Lex,
    /// Eliminates the first `first` variables: grevlex within each block,
    /// block one dominant.
    Block { first: usize },
}

impl MonomialOrder {
    /// Packs `m` into a big-endian `u128` key; keys compare the same way the
    /// order compares monomials.
    pub fn key(&self, m: &Monomial, nvars: usize, weights: &[u32]) -> u128 {
        let mut bytes = [0u8; 16];
        match *self {
            MonomialOrder::GrevLex => {
                grevlex_bytes(&mut bytes, m, 0, nvars, m.deg());
            }
            MonomialOrder::Lex => {
                for i in 0..nvars {
                    bytes[i] = m.exp(i);
                }
            }
            MonomialOrder::Block { first } => {
                let deg1: u32 =
                    (0..first).map(|i| m.exp(i) as u32 * weights[i]).sum();
                let deg2 = m.deg() as u32 - deg1;
                let used = grevlex_block(&mut bytes, m, 0, 0, first, deg1 as u16);
                grevlex_block(&mut bytes, m, used, first, nvars, deg2 as u16);
            }
        }
        u128::from_be_bytes(bytes)
    }
}

/// Writes `deg` (big-endian u16) then reversed complemented exponents of
/// variables `lo..hi`; returns the next free byte offset.
fn grevlex_block(
    bytes: &mut [u8; 16],
    m: &Monomial,
    at: usize,
    lo: usize,
    hi: usize,
    deg: u16,
) -> usize {
    let d = deg.to_be_bytes();
    bytes[at] = d[0];
    bytes[at + 1] = d[1];
    let mut j = at + 2;
    for i in (lo..hi).rev() {
        bytes[j] = 255 - m.exp(i);
        j += 1;
    }
    j
}

fn grevlex_bytes(bytes: &mut [u8; 16], m: &Monomial, at: usize, nvars: usize, deg: u16) {
    grevlex_block(bytes, m, at, 0, nvars, deg);
}

impl Serialize for MonomialOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            MonomialOrder::GrevLex => s.serialize_str("grevlex"),
            MonomialOrder::Lex => s.serialize_str("lex"),
            MonomialOrder::Block { first } => {
                use serde::ser::SerializeMap;
                let mut map = s.serialize_map(Some(1))?;
                map.serialize_entry("block", &first)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for MonomialOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Block { block: usize },
        }
        match Repr::deserialize(d)? {
            Repr::Name(s) => match s.as_str() {
                "grevlex" => Ok(MonomialOrder::GrevLex),
                "lex" => Ok(MonomialOrder::Lex),
                other => Err(D::Error::custom(format!(
                    "unknown monomial order {other:?}; expected \"grevlex\", \"lex\", or {{\"block\": n}}"
                ))),
            },
            Repr::Block { block } => Ok(MonomialOrder::Block { first: block }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: [u32; 3] = [1, 1, 1];

    fn mono(e: [u32; 3]) -> Monomial {
        Monomial::from_exps(&e, &W)
    }

    fn cmp(order: MonomialOrder, a: [u32; 3], b: [u32; 3]) -> std::cmp::Ordering {
        order
            .key(&mono(a), 3, &W)
            .cmp(&order.key(&mono(b), 3, &W))
    }

    #[test]
    fn grevlex_quadrics_in_three_variables() {
        // Textbook chain: x² > xy > y² > xz > yz > z².
        use std::cmp::Ordering::Greater;
        let chain = [
            [2, 0, 0],
            [1, 1, 0],
            [0, 2, 0],
            [1, 0, 1],
            [0, 1, 1],
            [0, 0, 2],
        ];
        for w in chain.windows(2) {
            assert_eq!(
                cmp(MonomialOrder::GrevLex, w[0], w[1]),
                Greater,
                "{:?} should beat {:?}",
                w[0],
                w[1]
            );
        }
    }

    #[test]
    fn grevlex_is_graded() {
        use std::cmp::Ordering::Less;
        assert_eq!(cmp(MonomialOrder::GrevLex, [1, 1, 0], [3, 0, 0]), Less);
    }

    #[test]
    fn lex_ignores_degree() {
        use std::cmp::Ordering::{Greater, Less};
        assert_eq!(cmp(MonomialOrder::Lex, [1, 0, 0], [0, 9, 9]), Greater);
        assert_eq!(cmp(MonomialOrder::Lex, [1, 0, 5], [1, 1, 0]), Less);
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        use std::cmp::Ordering::Greater;
        let o = MonomialOrder::Block { first: 1 };
        // x z⁰ beats any pure y,z monomial, however large.
        assert_eq!(cmp(o, [1, 0, 0], [0, 9, 9]), Greater);
        // Within the second block the order is grevlex.
        assert_eq!(cmp(o, [0, 1, 0], [0, 0, 1]), Greater);
    }

    #[test]
    fn serde_round_trip() {
        for o in [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::Block { first: 6 },
        ] {
            let text = serde_json::to_string(&o).unwrap();
            let back: MonomialOrder = serde_json::from_str(&text).unwrap();
            assert_eq!(o, back);
        }
        assert_eq!(
            serde_json::to_string(&MonomialOrder::GrevLex).unwrap(),
            "\"grevlex\""
        );
        assert!(serde_json::from_str::<MonomialOrder>("\"degrevlex\"").is_err());
    }
}
