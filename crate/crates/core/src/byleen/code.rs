//! Self-delimiting packing of tuples of naturals into a single natural.
//!
//! A code is a leading `1` followed by each component in turn: the
//! Elias-gamma code of `L + 1`, where `L` is the bit length of the
//! component, then its `L` bits. Every component is strictly smaller than
//! the code, and a natural decodes in at most one way.

use num_bigint::BigUint;

pub fn encode(components: &[BigUint]) -> BigUint {
    let mut bits: Vec<u8> = vec![1];
    for x in components {
        let len = x.bits();
        let header = BigUint::from(len + 1).to_radix_be(2);
        bits.extend(std::iter::repeat_n(0, header.len() - 1));
        bits.extend(header);
        if len > 0 {
            bits.extend(x.to_radix_be(2));
        }
    }
    BigUint::from_radix_be(&bits, 2).expect("binary digits")
}

/// The `count` components packed into `code`, if it is a valid code.
pub fn decode(code: &BigUint, count: usize) -> Option<Vec<BigUint>> {
    let bits = code.to_radix_be(2);
    if bits.first() != Some(&1) {
        return None;
    }
    let mut pos = 1;
    let mut take = |len: usize| -> Option<&[u8]> {
        let slice = bits.get(pos..pos + len)?;
        pos += len;
        Some(slice)
    };
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut zeros = 0;
        while take(1)? == [0] {
            zeros += 1;
        }
        let mut header = vec![1u8];
        header.extend_from_slice(take(zeros)?);
        let len = BigUint::from_radix_be(&header, 2)? - 1u32;
        let len = usize::try_from(&len).ok()?;
        if len == 0 {
            out.push(BigUint::default());
        } else {
            let body = take(len)?;
            if body[0] != 1 {
                return None;
            }
            out.push(BigUint::from_radix_be(body, 2)?);
        }
    }
    if take(1).is_some() {
        return None;
    }
    Some(out)
}
