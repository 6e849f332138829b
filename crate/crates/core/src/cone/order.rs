use crate::betti::DegreeSequence;

/// The partial order on degree sequences: `d <= e` when `d0 <= e0` and
/// `d1 <= e1` with at least one strict, or when `d0 = e0`, `d1 = e1` and
/// `d_n <= e_n` for every `n >= 2`. Infinity is above every integer.
pub fn degseq_leq(d: &DegreeSequence, e: &DegreeSequence) -> bool {
    let (d0, d1) = (d.degree(0), d.degree(1));
    let (e0, e1) = (e.degree(0), e.degree(1));
    if d0 == e0 && d1 == e1 {
        // tails are either all infinite or d1 + n - 1; comparing d_2 decides
        return d.degree(2) <= e.degree(2);
    }
    d0 <= e0 && d1 <= e1
}

/// Whether `d` and `e` are comparable in either direction.
pub fn comparable(d: &DegreeSequence, e: &DegreeSequence) -> bool {
    degseq_leq(d, e) || degseq_leq(e, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two(a: i64, b: i64) -> DegreeSequence {
        DegreeSequence::two_step(a, b).unwrap()
    }

    fn tail(a: i64, b: i64) -> DegreeSequence {
        DegreeSequence::tail(a, b).unwrap()
    }

    #[test]
    fn finite_tail_below_infinite_tail() {
        assert!(degseq_leq(&tail(0, 1), &two(0, 1)));
        assert!(!degseq_leq(&two(0, 1), &tail(0, 1)));
    }

    #[test]
    fn both_strict() {
        assert!(degseq_leq(&two(0, 2), &two(1, 3)));
        assert!(!degseq_leq(&two(1, 3), &two(0, 2)));
    }

    #[test]
    fn incomparable_pair() {
        assert!(!degseq_leq(&two(0, 3), &two(1, 2)));
        assert!(!degseq_leq(&two(1, 2), &two(0, 3)));
        assert!(!comparable(&two(0, 3), &two(1, 2)));
    }

    #[test]
    fn reflexive() {
        for d in [DegreeSequence::free(2), two(0, 4), tail(-1, 0)] {
            assert!(degseq_leq(&d, &d));
        }
    }

    #[test]
    fn free_sits_above_finite_d1() {
        assert!(degseq_leq(&two(0, 5), &DegreeSequence::free(0)));
        assert!(degseq_leq(
            &DegreeSequence::free(0),
            &DegreeSequence::free(1)
        ));
        assert!(!degseq_leq(&DegreeSequence::free(1), &two(0, 5)));
    }

    #[test]
    fn tail_vs_tail_with_different_d1() {
        assert!(degseq_leq(&tail(0, 1), &tail(0, 2)));
        assert!(degseq_leq(&tail(0, 2), &two(0, 3)));
    }
}
