/// Membership in `{(x, y) ∈ ℤ × ℤ : x ≤ y}`, a diagonal subsemigroup of
/// `(ℤ, +) × (ℤ, +)` that is not symmetric.
pub fn zdiag_member(x: i64, y: i64) -> bool {
    x <= y
}
