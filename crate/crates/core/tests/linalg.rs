use proptest::prelude::*;
use stperm_core::linalg::{Matrix, PrimeField};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (u32, Vec<Vec<i64>>)> {
    (
        prop::sample::select(vec![2u32, 3, 5, 7, 251]),
        1..=max_rows,
        1..=max_cols,
    )
        .prop_flat_map(|(p, r, c)| {
            (
                Just(p),
                prop::collection::vec(prop::collection::vec(0..p as i64, c), r),
            )
        })
}

proptest! {
    #[test]
    fn rank_nullity((p, rows) in matrix(7, 7)) {
        let f = PrimeField::new(p).unwrap();
        let m = Matrix::from_rows(f, &rows).unwrap();
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.checked_mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_reproduces_the_right_hand_side((p, rows) in matrix(6, 6), seed in prop::collection::vec(0i64..1000, 6)) {
        let f = PrimeField::new(p).unwrap();
        let m = Matrix::from_rows(f, &rows).unwrap();
        let x = Matrix::from_fn(f, m.cols(), 1, |r, _| seed[r]);
        let b = m.checked_mul(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.checked_mul(&y).unwrap(), b);
    }

    #[test]
    fn rank_of_a_product((p, a) in matrix(5, 5), seed in prop::collection::vec(0i64..1000, 25)) {
        let f = PrimeField::new(p).unwrap();
        let a = Matrix::from_rows(f, &a).unwrap();
        let b = Matrix::from_fn(f, a.cols(), 5, |r, c| seed[r * 5 + c]);
        let ab = a.checked_mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        prop_assert!(ab.rank() + a.cols() >= a.rank() + b.rank());
    }

    #[test]
    fn inverse_when_full_rank((p, rows) in matrix(5, 5)) {
        let f = PrimeField::new(p).unwrap();
        let m = Matrix::from_rows(f, &rows).unwrap();
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.is_square() && m.rank() == m.rows());
                prop_assert_eq!(m.checked_mul(&inv).unwrap(), Matrix::identity(f, m.rows()));
            }
            None => prop_assert!(!m.is_square() || m.rank() < m.rows()),
        }
    }

    #[test]
    fn kronecker_rank_multiplies((p, a) in matrix(4, 4), (_, b) in matrix(3, 3)) {
        let f = PrimeField::new(p).unwrap();
        let a = Matrix::from_rows(f, &a).unwrap();
        let b = Matrix::from_rows(f, &b.iter().map(|r| r.iter().map(|v| v % p as i64).collect()).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(a.kronecker(&b).rank(), a.rank() * b.rank());
    }
}
