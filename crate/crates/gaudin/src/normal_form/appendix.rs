//! Closed-form normal-form coefficients: the raw sixth-order coefficients,
//! the generating-function coefficients, and the criticality expressions
//! printed for the plus threshold.
//!
//! The polynomial numerators are machine-transcribed from the printed
//! displays; every value is pinned by exact-rational tests against an
//! independent symbolic evaluation.

use crate::scalar::Scalar;
use crate::GaudinError;

fn c<S: Scalar>(n: i64) -> S {
    S::from_int(n)
}

fn q<S: Scalar>(a: i64, b: i64) -> S {
    S::ratio(a, b)
}

fn pw<S: Scalar>(x: &S, n: u32) -> S {
    let mut out = S::one();
    for _ in 0..n {
        out = out * x.clone();
    }
    out
}

fn a3_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(2)*pw(&(r1h.clone()), 8)*t0.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2) + pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 2)*(pw(&(t3.clone()), 2)*(c::<S>(4)*t0.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) - (c::<S>(2)*t2.clone()*w.clone() + c::<S>(2)*t4.clone())*(c::<S>(2)*t0.clone()*w.clone()*(t1.clone() + t2.clone()) + t2.clone()*t4.clone()*w.clone() + pw(&(t4.clone()), 2))) + pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 4)*(c::<S>(2)*t0.clone()*pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(4)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2)) + pw(&(t3.clone()), 2)*(-c::<S>(8)*t0.clone() - c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(2)*t4.clone()) - c::<S>(4)*pw(&(t4.clone()), 3) + c::<S>(4)*pw(&(t4.clone()), 2)*(-t0.clone() + t1.clone()*w.clone() - t2.clone()*w.clone()) + c::<S>(4)*t4.clone()*w.clone()*(t0.clone()*t1.clone() - t0.clone()*t2.clone() + t1.clone()*t2.clone()*w.clone())) + pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 6)*(pw(&(t3.clone()), 2)*(c::<S>(4)*t0.clone() - c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t4.clone()) - (-c::<S>(2)*t1.clone()*w.clone() + c::<S>(2)*t4.clone())*(-c::<S>(2)*t0.clone()*w.clone()*(t1.clone() + t2.clone()) - t1.clone()*t4.clone()*w.clone() + pw(&(t4.clone()), 2))) + c::<S>(2)*pw(&(r2h.clone()), 8)*t0.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)
}

fn a6_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    -c::<S>(3)*pw(&(r1h.clone()), 14)*t0.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 3)*(c::<S>(2)*t0.clone() + t2.clone()*w.clone() + t4.clone()) + c::<S>(58)*pw(&(r1h.clone()), 13)*r2h.clone()*t0.clone()*t3.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2)*(c::<S>(2)*t0.clone() + t2.clone()*w.clone() + t4.clone()) + pw(&(r1h.clone()), 12)*pw(&(r2h.clone()), 2)*(t2.clone()*w.clone() + t4.clone())*(-c::<S>(2)*pw(&(t3.clone()), 2)*(c::<S>(44)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(46)*t2.clone()*w.clone() + c::<S>(46)*t4.clone()) + c::<S>(9)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) + (c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone())*(pw(&(t0.clone()), 2)*(c::<S>(6)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone() + c::<S>(2)*t4.clone()) + t0.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(3)*t1.clone()*w.clone() + c::<S>(2)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + t4.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2))) + c::<S>(2)*pw(&(r1h.clone()), 11)*pw(&(r2h.clone()), 3)*t3.clone()*(pw(&(t3.clone()), 2)*(c::<S>(40)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(68)*t2.clone()*w.clone() + c::<S>(68)*t4.clone()) + c::<S>(30)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) - (c::<S>(29)*t2.clone()*w.clone() + c::<S>(29)*t4.clone())*(pw(&(t0.clone()), 2)*(c::<S>(4)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone() + c::<S>(4)*t4.clone()) + t0.clone()*(c::<S>(2)*t2.clone()*w.clone() + c::<S>(2)*t4.clone())*(t1.clone()*w.clone() + t2.clone()*w.clone() + c::<S>(2)*t4.clone()) + t4.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2))) + pw(&(r1h.clone()), 10)*pw(&(r2h.clone()), 4)*(pw(&(t3.clone()), 4)*(c::<S>(6)*t2.clone()*w.clone() + c::<S>(6)*t4.clone()) + pw(&(t3.clone()), 2)*(c::<S>(2)*pw(&(t0.clone()), 2)*(c::<S>(44)*t1.clone()*w.clone() + c::<S>(176)*t2.clone()*w.clone() + c::<S>(132)*t4.clone()) + c::<S>(2)*t0.clone()*(c::<S>(2)*t2.clone()*w.clone() + c::<S>(2)*t4.clone())*(c::<S>(35)*t1.clone()*w.clone() + c::<S>(34)*t2.clone()*w.clone() + c::<S>(43)*t4.clone()) + c::<S>(2)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)*(c::<S>(15)*t1.clone()*w.clone() - c::<S>(18)*t2.clone()*w.clone() + c::<S>(13)*t4.clone())) + (c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone())*(pw(&(t0.clone()), 2)*(-c::<S>(6)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(12)*t1.clone()*w.clone()*(c::<S>(2)*t2.clone()*w.clone() + t4.clone()) - c::<S>(12)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(6)*pw(&(t4.clone()), 2)) - t0.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(3)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + t1.clone()*w.clone()*(c::<S>(5)*t2.clone()*w.clone() + c::<S>(11)*t4.clone()) + pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(5)*t2.clone()*t4.clone()*w.clone() - c::<S>(5)*pw(&(t4.clone()), 2)) - t4.clone()*(c::<S>(3)*t1.clone()*w.clone() - t4.clone())*pw(&(t2.clone()*w.clone() + t4.clone()), 2))) + c::<S>(2)*pw(&(r1h.clone()), 9)*pw(&(r2h.clone()), 5)*t3.clone()*(c::<S>(29)*pw(&(t0.clone()), 2)*(c::<S>(2)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(4)*t1.clone()*w.clone()*(c::<S>(4)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + c::<S>(12)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(8)*t2.clone()*t4.clone()*w.clone() - c::<S>(2)*pw(&(t4.clone()), 2)) + c::<S>(29)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(3)*t1.clone()*w.clone()*(t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(7)*t2.clone()*t4.clone()*w.clone() - pw(&(t4.clone()), 2)) + c::<S>(58)*t1.clone()*t4.clone()*w.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2) + c::<S>(6)*pw(&(t3.clone()), 4) - pw(&(t3.clone()), 2)*(c::<S>(160)*pw(&(t0.clone()), 2) + c::<S>(4)*t0.clone()*(c::<S>(12)*t1.clone()*w.clone() + c::<S>(22)*t2.clone()*w.clone() + c::<S>(30)*t4.clone()) + c::<S>(4)*(t2.clone()*w.clone() + t4.clone())*(c::<S>(9)*t1.clone()*w.clone() - c::<S>(3)*t2.clone()*w.clone() + c::<S>(5)*t4.clone()))) - pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 6)*(-c::<S>(3)*pw(&(t0.clone()), 2)*(c::<S>(2)*pw(&(t1.clone()), 3)*pw(&(w.clone()), 3) + c::<S>(6)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2)*(c::<S>(4)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + c::<S>(6)*t1.clone()*w.clone()*(c::<S>(6)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(4)*t2.clone()*t4.clone()*w.clone() - pw(&(t4.clone()), 2)) + c::<S>(8)*pw(&(t2.clone()), 3)*pw(&(w.clone()), 3) - c::<S>(12)*pw(&(t2.clone()), 2)*t4.clone()*pw(&(w.clone()), 2) - c::<S>(24)*t2.clone()*pw(&(t4.clone()), 2)*w.clone() - c::<S>(6)*pw(&(t4.clone()), 3)) - c::<S>(3)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(pw(&(t1.clone()), 3)*pw(&(w.clone()), 3) + c::<S>(3)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2)*(t2.clone()*w.clone() + c::<S>(4)*t4.clone()) + t1.clone()*w.clone()*(pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(20)*t2.clone()*t4.clone()*w.clone() - c::<S>(2)*pw(&(t4.clone()), 2)) + t4.clone()*(c::<S>(3)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(15)*t2.clone()*t4.clone()*w.clone() - c::<S>(7)*pw(&(t4.clone()), 2))) + pw(&(t3.clone()), 4)*(c::<S>(6)*t1.clone()*w.clone() + c::<S>(12)*t2.clone()*w.clone() + c::<S>(6)*t4.clone()) + pw(&(t3.clone()), 2)*(c::<S>(2)*pw(&(t0.clone()), 2)*(c::<S>(176)*t1.clone()*w.clone() + c::<S>(264)*t2.clone()*w.clone() + c::<S>(88)*t4.clone()) + c::<S>(2)*t0.clone()*(c::<S>(24)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(10)*t1.clone()*w.clone()*(c::<S>(7)*t2.clone()*w.clone() + c::<S>(11)*t4.clone()) - c::<S>(2)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(102)*t2.clone()*t4.clone()*w.clone() + c::<S>(40)*pw(&(t4.clone()), 2)) + c::<S>(2)*(t2.clone()*w.clone() + t4.clone())*(c::<S>(3)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(2)*t1.clone()*w.clone()*(-c::<S>(27)*t2.clone()*w.clone() + c::<S>(5)*t4.clone()) - c::<S>(3)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(24)*t2.clone()*t4.clone()*w.clone() + c::<S>(4)*pw(&(t4.clone()), 2))) - c::<S>(3)*t4.clone()*(t1.clone()*w.clone() - t4.clone())*pw(&(t2.clone()*w.clone() + t4.clone()), 2)*(c::<S>(3)*t1.clone()*w.clone() - t2.clone()*w.clone() + c::<S>(2)*t4.clone())) - c::<S>(2)*pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 7)*t3.clone()*(c::<S>(29)*pw(&(t0.clone()), 2)*(c::<S>(8)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(8)*t1.clone()*w.clone()*(c::<S>(3)*t2.clone()*w.clone() + t4.clone()) + c::<S>(8)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(8)*t2.clone()*t4.clone()*w.clone() - c::<S>(8)*pw(&(t4.clone()), 2)) + c::<S>(116)*t0.clone()*t4.clone()*(pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(2)*t1.clone()*w.clone()*(c::<S>(2)*t2.clone()*w.clone() + t4.clone()) + pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(2)*t2.clone()*t4.clone()*w.clone() - c::<S>(2)*pw(&(t4.clone()), 2)) + c::<S>(12)*pw(&(t3.clone()), 4) + pw(&(t3.clone()), 2)*(-c::<S>(240)*pw(&(t0.clone()), 2) - c::<S>(104)*t0.clone()*t4.clone() - c::<S>(28)*t0.clone()*w.clone()*(t1.clone() - t2.clone()) + c::<S>(20)*pw(&(t4.clone()), 2) + c::<S>(2)*t4.clone()*w.clone()*(-c::<S>(6)*t1.clone() + c::<S>(6)*t2.clone()) + c::<S>(2)*pw(&(w.clone()), 2)*(-c::<S>(3)*pw(&(t1.clone()), 2) + c::<S>(12)*t1.clone()*t2.clone() - c::<S>(3)*pw(&(t2.clone()), 2))) + c::<S>(29)*t4.clone()*(t1.clone()*w.clone() - t4.clone())*(t2.clone()*w.clone() + t4.clone())*(t1.clone()*w.clone() - t2.clone()*w.clone() + c::<S>(2)*t4.clone())) + pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 8)*(-c::<S>(6)*pw(&(t0.clone()), 2)*(c::<S>(4)*pw(&(t1.clone()), 3)*pw(&(w.clone()), 3) + c::<S>(6)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2)*(c::<S>(3)*t2.clone()*w.clone() + t4.clone()) + c::<S>(12)*t1.clone()*w.clone()*(pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - t2.clone()*t4.clone()*w.clone() - pw(&(t4.clone()), 2)) + pw(&(t2.clone()), 3)*pw(&(w.clone()), 3) - c::<S>(9)*pw(&(t2.clone()), 2)*t4.clone()*pw(&(w.clone()), 2) - c::<S>(3)*t2.clone()*pw(&(t4.clone()), 2)*w.clone() + c::<S>(3)*pw(&(t4.clone()), 3)) + c::<S>(3)*t0.clone()*(pw(&(t1.clone()), 3)*pw(&(w.clone()), 3)*(t2.clone()*w.clone() - c::<S>(3)*t4.clone()) + c::<S>(3)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2)*(pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(7)*t2.clone()*t4.clone()*w.clone() - c::<S>(4)*pw(&(t4.clone()), 2)) + t1.clone()*w.clone()*(pw(&(t2.clone()), 3)*pw(&(w.clone()), 3) - c::<S>(15)*pw(&(t2.clone()), 2)*t4.clone()*pw(&(w.clone()), 2) + c::<S>(18)*t2.clone()*pw(&(t4.clone()), 2)*w.clone() + c::<S>(22)*pw(&(t4.clone()), 3)) + t4.clone()*(-pw(&(t2.clone()), 3)*pw(&(w.clone()), 3) + c::<S>(12)*pw(&(t2.clone()), 2)*t4.clone()*pw(&(w.clone()), 2) + c::<S>(2)*t2.clone()*pw(&(t4.clone()), 2)*w.clone() - c::<S>(7)*pw(&(t4.clone()), 3))) + pw(&(t3.clone()), 4)*(c::<S>(12)*t1.clone()*w.clone() + c::<S>(6)*t2.clone()*w.clone() - c::<S>(6)*t4.clone()) - pw(&(t3.clone()), 2)*(c::<S>(2)*pw(&(t0.clone()), 2)*(-c::<S>(264)*t1.clone()*w.clone() - c::<S>(176)*t2.clone()*w.clone() + c::<S>(88)*t4.clone()) - c::<S>(2)*t0.clone()*(c::<S>(2)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(2)*t1.clone()*w.clone()*(-c::<S>(35)*t2.clone()*w.clone() + c::<S>(51)*t4.clone()) - c::<S>(24)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(110)*t2.clone()*t4.clone()*w.clone() - c::<S>(40)*pw(&(t4.clone()), 2)) + c::<S>(2)*(t1.clone()*w.clone() - t4.clone())*(c::<S>(3)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(6)*t1.clone()*w.clone()*(c::<S>(9)*t2.clone()*w.clone() + c::<S>(4)*t4.clone()) - c::<S>(3)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(10)*t2.clone()*t4.clone()*w.clone() - c::<S>(4)*pw(&(t4.clone()), 2))) - c::<S>(3)*t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)*(t2.clone()*w.clone() + t4.clone())*(t1.clone()*w.clone() - c::<S>(3)*t2.clone()*w.clone() + c::<S>(2)*t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 9)*t3.clone()*(-c::<S>(29)*pw(&(t0.clone()), 2)*(-c::<S>(12)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(8)*t1.clone()*w.clone()*(c::<S>(2)*t2.clone()*w.clone() - t4.clone()) - c::<S>(2)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(12)*t2.clone()*t4.clone()*w.clone() + c::<S>(2)*pw(&(t4.clone()), 2)) - c::<S>(29)*t0.clone()*(t1.clone()*w.clone() - t4.clone())*(pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + t1.clone()*w.clone()*(c::<S>(3)*t2.clone()*w.clone() - c::<S>(7)*t4.clone()) + pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(9)*t2.clone()*t4.clone()*w.clone() - pw(&(t4.clone()), 2)) - c::<S>(58)*t2.clone()*t4.clone()*w.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2) + c::<S>(6)*pw(&(t3.clone()), 4) - pw(&(t3.clone()), 2)*(c::<S>(160)*pw(&(t0.clone()), 2) - c::<S>(4)*t0.clone()*(c::<S>(22)*t1.clone()*w.clone() + c::<S>(12)*t2.clone()*w.clone() - c::<S>(30)*t4.clone()) - c::<S>(4)*(t1.clone()*w.clone() - t4.clone())*(c::<S>(3)*t1.clone()*w.clone() - c::<S>(9)*t2.clone()*w.clone() + c::<S>(5)*t4.clone()))) + pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 10)*(pw(&(t3.clone()), 4)*(-c::<S>(6)*t1.clone()*w.clone() + c::<S>(6)*t4.clone()) + pw(&(t3.clone()), 2)*(c::<S>(2)*pw(&(t0.clone()), 2)*(-c::<S>(176)*t1.clone()*w.clone() - c::<S>(44)*t2.clone()*w.clone() + c::<S>(132)*t4.clone()) + c::<S>(2)*t0.clone()*(c::<S>(2)*t1.clone()*w.clone() - c::<S>(2)*t4.clone())*(c::<S>(34)*t1.clone()*w.clone() + c::<S>(35)*t2.clone()*w.clone() - c::<S>(43)*t4.clone()) + c::<S>(2)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)*(c::<S>(18)*t1.clone()*w.clone() - c::<S>(15)*t2.clone()*w.clone() + c::<S>(13)*t4.clone())) + (-c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t4.clone())*(pw(&(t0.clone()), 2)*(-c::<S>(12)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(24)*t1.clone()*t2.clone()*pw(&(w.clone()), 2) - c::<S>(6)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(12)*t2.clone()*t4.clone()*w.clone() + c::<S>(6)*pw(&(t4.clone()), 2)) + t0.clone()*(t1.clone()*w.clone() - t4.clone())*(pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(5)*t1.clone()*w.clone()*(t2.clone()*w.clone() - t4.clone()) + c::<S>(3)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(11)*t2.clone()*t4.clone()*w.clone() - c::<S>(5)*pw(&(t4.clone()), 2)) + t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)*(c::<S>(3)*t2.clone()*w.clone() + t4.clone()))) + c::<S>(2)*pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 11)*t3.clone()*(pw(&(t3.clone()), 2)*(c::<S>(40)*pw(&(t0.clone()), 2) - t0.clone()*(c::<S>(68)*t1.clone()*w.clone() - c::<S>(68)*t4.clone()) + c::<S>(30)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) - (-c::<S>(29)*t1.clone()*w.clone() + c::<S>(29)*t4.clone())*(pw(&(t0.clone()), 2)*(-c::<S>(8)*t1.clone()*w.clone() - c::<S>(4)*t2.clone()*w.clone() + c::<S>(4)*t4.clone()) + t0.clone()*(c::<S>(2)*t1.clone()*w.clone() - c::<S>(2)*t4.clone())*(t1.clone()*w.clone() + t2.clone()*w.clone() - c::<S>(2)*t4.clone()) + t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2))) + pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 12)*(-t1.clone()*w.clone() + t4.clone())*(-c::<S>(2)*pw(&(t3.clone()), 2)*(c::<S>(44)*pw(&(t0.clone()), 2) - t0.clone()*(c::<S>(46)*t1.clone()*w.clone() - c::<S>(46)*t4.clone()) + c::<S>(9)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) + (-c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t4.clone())*(pw(&(t0.clone()), 2)*(-c::<S>(8)*t1.clone()*w.clone() - c::<S>(6)*t2.clone()*w.clone() + c::<S>(2)*t4.clone()) + t0.clone()*(t1.clone()*w.clone() - t4.clone())*(c::<S>(2)*t1.clone()*w.clone() + c::<S>(3)*t2.clone()*w.clone() - c::<S>(3)*t4.clone()) + t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2))) + c::<S>(58)*r1h.clone()*pw(&(r2h.clone()), 13)*t0.clone()*t3.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)*(c::<S>(2)*t0.clone() - t1.clone()*w.clone() + t4.clone()) + c::<S>(3)*pw(&(r2h.clone()), 14)*t0.clone()*pw(&(t1.clone()*w.clone() - t4.clone()), 3)*(c::<S>(2)*t0.clone() - t1.clone()*w.clone() + t4.clone())
}

fn a7_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    -c::<S>(64)*pw(&(r1h.clone()), 12)*pw(&(t0.clone()), 2)*pw(&(t2.clone()*w.clone() + t4.clone()), 2) - c::<S>(16)*pw(&(r1h.clone()), 11)*r2h.clone()*t0.clone()*t3.clone()*(t2.clone()*w.clone() + t4.clone())*(-c::<S>(5)*t0.clone() + t2.clone()*w.clone() + t4.clone()) + pw(&(r1h.clone()), 10)*pw(&(r2h.clone()), 2)*(c::<S>(64)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(2)*t0.clone()*w.clone()*(t1.clone() + t2.clone()) + t2.clone()*t4.clone()*w.clone() + pw(&(t4.clone()), 2)) + pw(&(t3.clone()), 2)*(-c::<S>(64)*pw(&(t0.clone()), 2) - c::<S>(76)*t0.clone()*t2.clone()*w.clone() - c::<S>(76)*t0.clone()*t4.clone() + c::<S>(9)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(18)*t2.clone()*t4.clone()*w.clone() + c::<S>(9)*pw(&(t4.clone()), 2))) - c::<S>(2)*pw(&(r1h.clone()), 9)*pw(&(r2h.clone()), 3)*t3.clone()*(c::<S>(4)*t0.clone()*w.clone()*(c::<S>(10)*t0.clone()*t1.clone() + c::<S>(20)*t0.clone()*t2.clone() + c::<S>(3)*t1.clone()*t2.clone()*w.clone() - c::<S>(5)*pw(&(t2.clone()), 2)*w.clone()) + pw(&(t3.clone()), 2)*(-c::<S>(40)*t0.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) - c::<S>(8)*pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(8)*t0.clone() - c::<S>(16)*t2.clone()*w.clone()) + t4.clone()*(c::<S>(40)*pw(&(t0.clone()), 2) + c::<S>(12)*t0.clone()*w.clone()*(t1.clone() - t2.clone()) - c::<S>(8)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2))) - c::<S>(2)*pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 4)*(-c::<S>(32)*t0.clone()*(-t1.clone()*w.clone() + t4.clone())*(t0.clone()*w.clone()*(t1.clone() + c::<S>(4)*t2.clone()) + c::<S>(2)*pw(&(t4.clone()), 2) + t4.clone()*(c::<S>(3)*t0.clone() + c::<S>(2)*t2.clone()*w.clone())) + c::<S>(12)*pw(&(t3.clone()), 4) - pw(&(t3.clone()), 2)*(c::<S>(64)*pw(&(t0.clone()), 2) + c::<S>(54)*t0.clone()*t1.clone()*w.clone() - c::<S>(14)*t0.clone()*t2.clone()*w.clone() - c::<S>(36)*t0.clone()*t4.clone() + c::<S>(3)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(8)*t2.clone()*t4.clone()*w.clone() + c::<S>(5)*pw(&(t4.clone()), 2))) - c::<S>(2)*pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 5)*t3.clone()*(-c::<S>(4)*t0.clone()*w.clone()*(c::<S>(20)*t0.clone()*t1.clone() + c::<S>(5)*pw(&(t1.clone()), 2)*w.clone() - c::<S>(3)*t1.clone()*t2.clone()*w.clone() + c::<S>(2)*pw(&(t2.clone()), 2)*w.clone()) - c::<S>(16)*t2.clone()*pw(&(t4.clone()), 2)*w.clone() + pw(&(t3.clone()), 2)*(c::<S>(24)*t0.clone() + c::<S>(9)*t1.clone()*w.clone() + c::<S>(12)*t2.clone()*w.clone() + c::<S>(19)*t4.clone()) - c::<S>(8)*pw(&(t4.clone()), 3) - c::<S>(4)*t4.clone()*(-c::<S>(20)*pw(&(t0.clone()), 2) - c::<S>(3)*t0.clone()*t1.clone()*w.clone() + c::<S>(7)*t0.clone()*t2.clone()*w.clone() + c::<S>(2)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2))) - pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 6)*w.clone()*(t1.clone() + t2.clone())*(c::<S>(64)*t0.clone()*(c::<S>(2)*t0.clone() + t4.clone())*(c::<S>(2)*t4.clone() + w.clone()*(-t1.clone() + t2.clone())) + pw(&(t3.clone()), 2)*(c::<S>(4)*t0.clone() + c::<S>(9)*t1.clone()*w.clone() - c::<S>(9)*t2.clone()*w.clone() + c::<S>(18)*t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 7)*t3.clone()*(-c::<S>(4)*t0.clone()*w.clone()*(-c::<S>(20)*t0.clone()*t2.clone() + c::<S>(2)*pw(&(t1.clone()), 2)*w.clone() - c::<S>(3)*t1.clone()*t2.clone()*w.clone() + c::<S>(5)*pw(&(t2.clone()), 2)*w.clone()) + c::<S>(16)*t1.clone()*pw(&(t4.clone()), 2)*w.clone() + pw(&(t3.clone()), 2)*(c::<S>(24)*t0.clone() - c::<S>(12)*t1.clone()*w.clone() - c::<S>(9)*t2.clone()*w.clone() + c::<S>(19)*t4.clone()) - c::<S>(8)*pw(&(t4.clone()), 3) - c::<S>(4)*t4.clone()*(-c::<S>(20)*pw(&(t0.clone()), 2) - c::<S>(7)*t0.clone()*t1.clone()*w.clone() + c::<S>(3)*t0.clone()*t2.clone()*w.clone() + c::<S>(2)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2))) + c::<S>(2)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 8)*(-c::<S>(32)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(-t0.clone()*w.clone()*(c::<S>(4)*t1.clone() + t2.clone()) + c::<S>(2)*pw(&(t4.clone()), 2) + t4.clone()*(c::<S>(3)*t0.clone() - c::<S>(2)*t1.clone()*w.clone())) + c::<S>(12)*pw(&(t3.clone()), 4) + pw(&(t3.clone()), 2)*(-c::<S>(64)*pw(&(t0.clone()), 2) - c::<S>(14)*t0.clone()*t1.clone()*w.clone() + c::<S>(54)*t0.clone()*t2.clone()*w.clone() + c::<S>(36)*t0.clone()*t4.clone() - c::<S>(3)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(8)*t1.clone()*t4.clone()*w.clone() - c::<S>(5)*pw(&(t4.clone()), 2))) + c::<S>(2)*pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 9)*t3.clone()*(-c::<S>(4)*t0.clone()*w.clone()*(c::<S>(20)*t0.clone()*t1.clone() + c::<S>(10)*t0.clone()*t2.clone() + c::<S>(5)*pw(&(t1.clone()), 2)*w.clone() - c::<S>(3)*t1.clone()*t2.clone()*w.clone()) + pw(&(t3.clone()), 2)*(-c::<S>(40)*t0.clone() - c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t4.clone()) - c::<S>(8)*pw(&(t4.clone()), 3) + c::<S>(4)*pw(&(t4.clone()), 2)*(c::<S>(2)*t0.clone() + c::<S>(4)*t1.clone()*w.clone()) - c::<S>(4)*t4.clone()*(-c::<S>(10)*pw(&(t0.clone()), 2) + c::<S>(3)*t0.clone()*w.clone()*(-t1.clone() + t2.clone()) + c::<S>(2)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2))) + pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 10)*(c::<S>(64)*t0.clone()*(-t1.clone()*w.clone() + t4.clone())*(c::<S>(2)*t0.clone()*w.clone()*(t1.clone() + t2.clone()) + t1.clone()*t4.clone()*w.clone() - pw(&(t4.clone()), 2)) + pw(&(t3.clone()), 2)*(c::<S>(64)*pw(&(t0.clone()), 2) - c::<S>(76)*t0.clone()*t1.clone()*w.clone() + c::<S>(76)*t0.clone()*t4.clone() - c::<S>(9)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(18)*t1.clone()*t4.clone()*w.clone() - c::<S>(9)*pw(&(t4.clone()), 2))) + c::<S>(16)*r1h.clone()*pw(&(r2h.clone()), 11)*t0.clone()*t3.clone()*(-t1.clone()*w.clone() + t4.clone())*(-c::<S>(5)*t0.clone() - t1.clone()*w.clone() + t4.clone()) + c::<S>(64)*pw(&(r2h.clone()), 12)*pw(&(t0.clone()), 2)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)
}

fn a8_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(3)*pw(&(r1h.clone()), 12)*t0.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2)*(c::<S>(162)*t0.clone() + t2.clone()*w.clone() + t4.clone()) + c::<S>(4)*pw(&(r1h.clone()), 11)*r2h.clone()*t0.clone()*t3.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(134)*t0.clone() + c::<S>(7)*t2.clone()*w.clone() + c::<S>(7)*t4.clone()) - pw(&(r1h.clone()), 10)*pw(&(r2h.clone()), 2)*(pw(&(t3.clone()), 2)*(c::<S>(920)*pw(&(t0.clone()), 2) - c::<S>(368)*t0.clone()*t2.clone()*w.clone() - c::<S>(368)*t0.clone()*t4.clone() + c::<S>(27)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2) + c::<S>(54)*t2.clone()*t4.clone()*w.clone() + c::<S>(27)*pw(&(t4.clone()), 2)) + (c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone())*(c::<S>(2)*t0.clone()*w.clone()*(c::<S>(162)*t0.clone()*t1.clone() + c::<S>(4)*t0.clone()*t2.clone() + t1.clone()*t2.clone()*w.clone() + pw(&(t2.clone()), 2)*w.clone()) + pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(4)*t0.clone() + c::<S>(2)*t2.clone()*w.clone()) + t4.clone()*(-c::<S>(316)*pw(&(t0.clone()), 2) + c::<S>(2)*t0.clone()*w.clone()*(t1.clone() + c::<S>(3)*t2.clone()) + pw(&(t2.clone()), 2)*pw(&(w.clone()), 2)))) - c::<S>(4)*pw(&(r1h.clone()), 9)*pw(&(r2h.clone()), 3)*t3.clone()*(t0.clone()*w.clone()*(c::<S>(134)*t0.clone()*t1.clone() + c::<S>(56)*t0.clone()*t2.clone() - c::<S>(53)*t1.clone()*t2.clone()*w.clone() - c::<S>(46)*pw(&(t2.clone()), 2)*w.clone()) + c::<S>(3)*pw(&(t3.clone()), 2)*(-c::<S>(60)*t0.clone() + c::<S>(7)*t2.clone()*w.clone() + c::<S>(7)*t4.clone()) + c::<S>(7)*pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(35)*t0.clone() + c::<S>(14)*t2.clone()*w.clone()) - t4.clone()*(c::<S>(78)*pw(&(t0.clone()), 2) + c::<S>(53)*t0.clone()*t1.clone()*w.clone() + c::<S>(11)*t0.clone()*t2.clone()*w.clone() - c::<S>(7)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2))) + pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 4)*(c::<S>(3)*t0.clone()*pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2)*(c::<S>(162)*t0.clone() + t2.clone()*w.clone()) + t1.clone()*t2.clone()*(c::<S>(16)*t0.clone() + c::<S>(3)*t2.clone()*w.clone()) + pw(&(t2.clone()), 2)*(-c::<S>(308)*t0.clone() + t2.clone()*w.clone())) - c::<S>(84)*pw(&(t3.clone()), 4) + pw(&(t3.clone()), 2)*(-c::<S>(160)*pw(&(t0.clone()), 2) + c::<S>(2)*t0.clone()*(c::<S>(66)*t1.clone()*w.clone() + c::<S>(46)*t2.clone()*w.clone()) + c::<S>(6)*t2.clone()*pw(&(w.clone()), 2)*(-c::<S>(2)*t1.clone() + t2.clone()) + c::<S>(10)*pw(&(t4.clone()), 2) + c::<S>(2)*t4.clone()*(-c::<S>(60)*t0.clone() - c::<S>(6)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone())) + c::<S>(3)*pw(&(t4.clone()), 3)*(-t0.clone() + c::<S>(2)*t1.clone()*w.clone()) + c::<S>(3)*pw(&(t4.clone()), 2)*(-c::<S>(162)*pw(&(t0.clone()), 2) + c::<S>(9)*t0.clone()*t1.clone()*w.clone() + c::<S>(6)*t0.clone()*t2.clone()*w.clone() + c::<S>(4)*t1.clone()*t2.clone()*pw(&(w.clone()), 2)) + c::<S>(3)*t4.clone()*w.clone()*(t0.clone()*pw(&(t1.clone()), 2)*w.clone() + c::<S>(8)*t0.clone()*t2.clone()*(-c::<S>(79)*t0.clone() + t2.clone()*w.clone()) + t1.clone()*(-c::<S>(308)*pw(&(t0.clone()), 2) + c::<S>(12)*t0.clone()*t2.clone()*w.clone() + c::<S>(2)*pw(&(t2.clone()), 2)*pw(&(w.clone()), 2)))) + c::<S>(4)*pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 5)*t3.clone()*(t0.clone()*w.clone()*(c::<S>(56)*t0.clone()*t1.clone() - c::<S>(156)*t0.clone()*t2.clone() - c::<S>(60)*pw(&(t1.clone()), 2)*w.clone() - c::<S>(53)*t1.clone()*t2.clone()*w.clone() + c::<S>(7)*pw(&(t2.clone()), 2)*w.clone()) + c::<S>(3)*pw(&(t3.clone()), 2)*(-c::<S>(60)*t0.clone() - c::<S>(3)*t1.clone()*w.clone() + c::<S>(14)*t2.clone()*w.clone() + c::<S>(17)*t4.clone()) + c::<S>(7)*pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(28)*t0.clone() + c::<S>(7)*w.clone()*(t1.clone() + t2.clone())) + t4.clone()*(-c::<S>(212)*pw(&(t0.clone()), 2) + t0.clone()*w.clone()*(c::<S>(95)*t1.clone() + c::<S>(123)*t2.clone()) + c::<S>(7)*t1.clone()*t2.clone()*pw(&(w.clone()), 2))) + pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 6)*(-c::<S>(24)*pw(&(t0.clone()), 2)*pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) - c::<S>(77)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2)) + c::<S>(288)*pw(&(t3.clone()), 4) + pw(&(t3.clone()), 2)*(c::<S>(2160)*pw(&(t0.clone()), 2) + c::<S>(328)*t0.clone()*w.clone()*(t1.clone() - t2.clone()) + c::<S>(154)*pw(&(t4.clone()), 2) - t4.clone()*(c::<S>(496)*t0.clone() + c::<S>(102)*w.clone()*(t1.clone() - t2.clone())) + pw(&(w.clone()), 2)*(c::<S>(39)*pw(&(t1.clone()), 2) - c::<S>(12)*t1.clone()*t2.clone() + c::<S>(39)*pw(&(t2.clone()), 2))) + c::<S>(6)*pw(&(t4.clone()), 4) - c::<S>(3)*pw(&(t4.clone()), 3)*(-c::<S>(8)*t0.clone() + w.clone()*(t1.clone() - t2.clone())) - c::<S>(3)*pw(&(t4.clone()), 2)*(c::<S>(632)*pw(&(t0.clone()), 2) + c::<S>(8)*t0.clone()*w.clone()*(t1.clone() - t2.clone()) + pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + pw(&(t2.clone()), 2))) - c::<S>(3)*t4.clone()*w.clone()*(c::<S>(4)*t0.clone()*t2.clone()*(c::<S>(158)*t0.clone() + t2.clone()*w.clone()) + pw(&(t1.clone()), 2)*w.clone()*(c::<S>(4)*t0.clone() + t2.clone()*w.clone()) - t1.clone()*(c::<S>(632)*pw(&(t0.clone()), 2) - c::<S>(16)*t0.clone()*t2.clone()*w.clone() + pw(&(t2.clone()), 2)*pw(&(w.clone()), 2)))) + c::<S>(4)*pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 7)*t3.clone()*(t0.clone()*w.clone()*(c::<S>(156)*t0.clone()*t1.clone() - c::<S>(56)*t0.clone()*t2.clone() + c::<S>(7)*pw(&(t1.clone()), 2)*w.clone() - c::<S>(53)*t1.clone()*t2.clone()*w.clone() - c::<S>(60)*pw(&(t2.clone()), 2)*w.clone()) + c::<S>(3)*pw(&(t3.clone()), 2)*(-c::<S>(60)*t0.clone() - c::<S>(14)*t1.clone()*w.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(17)*t4.clone()) + c::<S>(7)*pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(28)*t0.clone() - c::<S>(7)*w.clone()*(t1.clone() + t2.clone())) - t4.clone()*(c::<S>(212)*pw(&(t0.clone()), 2) + t0.clone()*w.clone()*(c::<S>(123)*t1.clone() + c::<S>(95)*t2.clone()) - c::<S>(7)*t1.clone()*t2.clone()*pw(&(w.clone()), 2))) - pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 8)*(c::<S>(3)*t0.clone()*pw(&(w.clone()), 2)*(-c::<S>(162)*t0.clone()*pw(&(t2.clone()), 2) + pw(&(t1.clone()), 3)*w.clone() + pw(&(t1.clone()), 2)*(c::<S>(308)*t0.clone() + c::<S>(3)*t2.clone()*w.clone()) + t1.clone()*t2.clone()*(-c::<S>(16)*t0.clone() + t2.clone()*w.clone())) + c::<S>(84)*pw(&(t3.clone()), 4) - pw(&(t3.clone()), 2)*(-c::<S>(160)*pw(&(t0.clone()), 2) - c::<S>(4)*t0.clone()*w.clone()*(c::<S>(23)*t1.clone() + c::<S>(33)*t2.clone()) + c::<S>(6)*t1.clone()*pw(&(w.clone()), 2)*(t1.clone() - c::<S>(2)*t2.clone()) + c::<S>(10)*pw(&(t4.clone()), 2) + c::<S>(2)*t4.clone()*(-c::<S>(60)*t0.clone() - c::<S>(8)*t1.clone()*w.clone() + c::<S>(6)*t2.clone()*w.clone())) + c::<S>(3)*pw(&(t4.clone()), 3)*(t0.clone() + c::<S>(2)*t2.clone()*w.clone()) + c::<S>(3)*pw(&(t4.clone()), 2)*(c::<S>(162)*pw(&(t0.clone()), 2) + c::<S>(6)*t0.clone()*t1.clone()*w.clone() + c::<S>(9)*t0.clone()*t2.clone()*w.clone() - c::<S>(4)*t1.clone()*t2.clone()*pw(&(w.clone()), 2)) - c::<S>(3)*t4.clone()*w.clone()*(c::<S>(4)*t0.clone()*t1.clone()*(c::<S>(158)*t0.clone() + c::<S>(3)*t2.clone()*w.clone()) + t0.clone()*t2.clone()*(c::<S>(308)*t0.clone() + t2.clone()*w.clone()) - c::<S>(2)*pw(&(t1.clone()), 2)*w.clone()*(-c::<S>(4)*t0.clone() + t2.clone()*w.clone()))) - c::<S>(4)*pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 9)*t3.clone()*(-t0.clone()*w.clone()*(c::<S>(56)*t0.clone()*t1.clone() + c::<S>(134)*t0.clone()*t2.clone() + c::<S>(46)*pw(&(t1.clone()), 2)*w.clone() + c::<S>(53)*t1.clone()*t2.clone()*w.clone()) + c::<S>(3)*pw(&(t3.clone()), 2)*(-c::<S>(60)*t0.clone() - c::<S>(7)*t1.clone()*w.clone() + c::<S>(7)*t4.clone()) + c::<S>(7)*pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(35)*t0.clone() - c::<S>(14)*t1.clone()*w.clone()) + t4.clone()*(-c::<S>(78)*pw(&(t0.clone()), 2) + c::<S>(11)*t0.clone()*t1.clone()*w.clone() + c::<S>(53)*t0.clone()*t2.clone()*w.clone() + c::<S>(7)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2))) - pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 10)*(pw(&(t3.clone()), 2)*(c::<S>(920)*pw(&(t0.clone()), 2) + c::<S>(368)*t0.clone()*t1.clone()*w.clone() - c::<S>(368)*t0.clone()*t4.clone() + c::<S>(27)*pw(&(t1.clone()), 2)*pw(&(w.clone()), 2) - c::<S>(54)*t1.clone()*t4.clone()*w.clone() + c::<S>(27)*pw(&(t4.clone()), 2)) + (-c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t4.clone())*(c::<S>(2)*t0.clone()*w.clone()*(-c::<S>(4)*t0.clone()*t1.clone() - c::<S>(162)*t0.clone()*t2.clone() + pw(&(t1.clone()), 2)*w.clone() + t1.clone()*t2.clone()*w.clone()) + pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(c::<S>(4)*t0.clone() - c::<S>(2)*t1.clone()*w.clone()) + t4.clone()*(-c::<S>(316)*pw(&(t0.clone()), 2) - c::<S>(2)*t0.clone()*w.clone()*(c::<S>(3)*t1.clone() + t2.clone()) + pw(&(t1.clone()), 2)*pw(&(w.clone()), 2)))) + c::<S>(4)*r1h.clone()*pw(&(r2h.clone()), 11)*t0.clone()*t3.clone()*(-t1.clone()*w.clone() + t4.clone())*(c::<S>(134)*t0.clone() - c::<S>(7)*t1.clone()*w.clone() + c::<S>(7)*t4.clone()) + c::<S>(3)*pw(&(r2h.clone()), 12)*t0.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)*(c::<S>(162)*t0.clone() - t1.clone()*w.clone() + t4.clone())
}

fn e1_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    -c::<S>(10)*pw(&(r1h.clone()), 6)*t0.clone()*(t2.clone()*w.clone() + t4.clone()) + pw(&(r1h.clone()), 5)*r2h.clone()*t3.clone()*(c::<S>(4)*t0.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + c::<S>(2)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 2)*(c::<S>(5)*t0.clone()*(t1.clone()*w.clone() + c::<S>(2)*t2.clone()*w.clone() + t4.clone()) - c::<S>(3)*pw(&(t3.clone()), 2) + c::<S>(5)*t4.clone()*(t2.clone()*w.clone() + t4.clone())) + pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 3)*t3.clone()*(-c::<S>(8)*t0.clone() - c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(2)*t4.clone()) - c::<S>(2)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 4)*(c::<S>(5)*t0.clone()*(c::<S>(2)*t1.clone()*w.clone() + t2.clone()*w.clone() - t4.clone()) + c::<S>(5)*t1.clone()*t4.clone()*w.clone() + c::<S>(3)*pw(&(t3.clone()), 2) - c::<S>(5)*pw(&(t4.clone()), 2)) + r1h.clone()*pw(&(r2h.clone()), 5)*t3.clone()*(c::<S>(4)*t0.clone() - c::<S>(3)*t1.clone()*w.clone() + c::<S>(3)*t4.clone()) + c::<S>(10)*pw(&(r2h.clone()), 6)*t0.clone()*(t1.clone()*w.clone() - t4.clone())
}

fn f1_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(296)*pw(&(r1h.clone()), 12)*t0.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2)*(c::<S>(2)*t0.clone() + t2.clone()*w.clone() + t4.clone()) - pw(&(r1h.clone()), 11)*r2h.clone()*t3.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(1088)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(664)*t2.clone()*w.clone() + c::<S>(664)*t4.clone()) + c::<S>(45)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) + c::<S>(2)*pw(&(r1h.clone()), 10)*pw(&(r2h.clone()), 2)*(pw(&(t3.clone()), 2)*(c::<S>(800)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(928)*t2.clone()*w.clone() + c::<S>(928)*t4.clone()) + c::<S>(243)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) - (c::<S>(148)*t2.clone()*w.clone() + c::<S>(148)*t4.clone())*(pw(&(t0.clone()), 2)*(c::<S>(4)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone() + c::<S>(4)*t4.clone()) + t0.clone()*(c::<S>(2)*t4.clone() + w.clone()*(t1.clone() + t2.clone()))*(c::<S>(2)*t2.clone()*w.clone() + c::<S>(2)*t4.clone()) + t4.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2))) + pw(&(r1h.clone()), 9)*pw(&(r2h.clone()), 3)*t3.clone()*(pw(&(t0.clone()), 2)*(c::<S>(1088)*t1.clone()*w.clone() + c::<S>(4352)*t2.clone()*w.clone() + c::<S>(3264)*t4.clone()) + t0.clone()*(-c::<S>(480)*pw(&(t3.clone()), 2) + c::<S>(8)*(t2.clone()*w.clone() + t4.clone())*(c::<S>(98)*t1.clone()*w.clone() + c::<S>(151)*t2.clone()*w.clone() + c::<S>(325)*t4.clone())) + (-c::<S>(348)*pw(&(t3.clone()), 2) + (t2.clone()*w.clone() + t4.clone())*(c::<S>(75)*t1.clone()*w.clone() - c::<S>(90)*t2.clone()*w.clone() + c::<S>(499)*t4.clone()))*(t2.clone()*w.clone() + t4.clone())) + c::<S>(4)*pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 4)*(c::<S>(74)*pw(&(t0.clone()), 2)*(-c::<S>(2)*pw(&(t4.clone()), 2) + c::<S>(2)*t4.clone()*w.clone()*(c::<S>(6)*t1.clone() + c::<S>(4)*t2.clone()) + c::<S>(2)*pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(8)*t1.clone()*t2.clone() + c::<S>(6)*pw(&(t2.clone()), 2))) + c::<S>(74)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(-pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(c::<S>(9)*t1.clone() + c::<S>(7)*t2.clone()) + pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(3)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2))) + c::<S>(148)*t1.clone()*t4.clone()*w.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2) + c::<S>(18)*pw(&(t3.clone()), 4) - pw(&(t3.clone()), 2)*(c::<S>(1600)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(264)*t1.clone()*w.clone() + c::<S>(664)*t2.clone()*w.clone() + c::<S>(1200)*t4.clone()) + (t2.clone()*w.clone() + t4.clone())*(c::<S>(111)*t1.clone()*w.clone() - c::<S>(153)*t2.clone()*w.clone() + c::<S>(200)*t4.clone()))) + pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 5)*t3.clone()*(c::<S>(12)*pw(&(t3.clone()), 2)*(c::<S>(40)*t0.clone() + c::<S>(9)*t1.clone()*w.clone() - c::<S>(2)*t2.clone()*w.clone() + c::<S>(29)*t4.clone()) - c::<S>(454)*pw(&(t4.clone()), 3) - pw(&(t4.clone()), 2)*(c::<S>(1936)*t0.clone() + c::<S>(484)*t1.clone()*w.clone() + c::<S>(574)*t2.clone()*w.clone()) - t4.clone()*(c::<S>(2176)*pw(&(t0.clone()), 2) + c::<S>(32)*t0.clone()*w.clone()*(c::<S>(85)*t1.clone() + c::<S>(138)*t2.clone()) + pw(&(w.clone()), 2)*(c::<S>(15)*pw(&(t1.clone()), 2) + c::<S>(214)*t1.clone()*t2.clone() + c::<S>(105)*pw(&(t2.clone()), 2))) - w.clone()*(c::<S>(2176)*pw(&(t0.clone()), 2)*(c::<S>(2)*t1.clone() + c::<S>(3)*t2.clone()) + c::<S>(8)*t0.clone()*w.clone()*(c::<S>(15)*pw(&(t1.clone()), 2) + c::<S>(98)*t1.clone()*t2.clone() + c::<S>(53)*pw(&(t2.clone()), 2)) - c::<S>(15)*t2.clone()*pw(&(w.clone()), 2)*(-pw(&(t1.clone()), 2) + c::<S>(18)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2)))) - c::<S>(2)*pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 6)*(c::<S>(148)*pw(&(t0.clone()), 2)*(-c::<S>(8)*pw(&(t4.clone()), 2) + c::<S>(8)*t4.clone()*w.clone()*(t1.clone() - t2.clone()) + c::<S>(8)*pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(3)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2))) + c::<S>(592)*t0.clone()*t4.clone()*(-c::<S>(2)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(c::<S>(2)*t1.clone() - c::<S>(2)*t2.clone()) + pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(4)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2))) + c::<S>(72)*pw(&(t3.clone()), 4) + pw(&(t3.clone()), 2)*(-c::<S>(4800)*pw(&(t0.clone()), 2) - c::<S>(128)*t0.clone()*(t1.clone()*w.clone() - t2.clone()*w.clone() + c::<S>(23)*t4.clone()) - c::<S>(314)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(c::<S>(42)*t1.clone() - c::<S>(42)*t2.clone()) + pw(&(w.clone()), 2)*(c::<S>(21)*pw(&(t1.clone()), 2) + c::<S>(612)*t1.clone()*t2.clone() + c::<S>(21)*pw(&(t2.clone()), 2))) + c::<S>(148)*t4.clone()*(t1.clone()*w.clone() - t4.clone())*(t2.clone()*w.clone() + t4.clone())*(t1.clone()*w.clone() - t2.clone()*w.clone() + c::<S>(2)*t4.clone())) + pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 7)*t3.clone()*(c::<S>(12)*pw(&(t3.clone()), 2)*(c::<S>(40)*t0.clone() + c::<S>(2)*t1.clone()*w.clone() - c::<S>(9)*t2.clone()*w.clone() + c::<S>(29)*t4.clone()) - c::<S>(454)*pw(&(t4.clone()), 3) + pw(&(t4.clone()), 2)*(-c::<S>(1936)*t0.clone() + c::<S>(574)*t1.clone()*w.clone() + c::<S>(484)*t2.clone()*w.clone()) - t4.clone()*(c::<S>(2176)*pw(&(t0.clone()), 2) - c::<S>(32)*t0.clone()*w.clone()*(c::<S>(138)*t1.clone() + c::<S>(85)*t2.clone()) + pw(&(w.clone()), 2)*(c::<S>(105)*pw(&(t1.clone()), 2) + c::<S>(214)*t1.clone()*t2.clone() + c::<S>(15)*pw(&(t2.clone()), 2))) - w.clone()*(-c::<S>(2176)*pw(&(t0.clone()), 2)*(c::<S>(3)*t1.clone() + c::<S>(2)*t2.clone()) + c::<S>(8)*t0.clone()*w.clone()*(c::<S>(53)*pw(&(t1.clone()), 2) + c::<S>(98)*t1.clone()*t2.clone() + c::<S>(15)*pw(&(t2.clone()), 2)) + c::<S>(15)*t1.clone()*pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(18)*t1.clone()*t2.clone() - pw(&(t2.clone()), 2)))) + c::<S>(4)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 8)*(-c::<S>(74)*pw(&(t0.clone()), 2)*(c::<S>(2)*pw(&(t4.clone()), 2) + c::<S>(2)*t4.clone()*w.clone()*(c::<S>(4)*t1.clone() + c::<S>(6)*t2.clone()) - c::<S>(2)*pw(&(w.clone()), 2)*(c::<S>(6)*pw(&(t1.clone()), 2) + c::<S>(8)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2))) - c::<S>(74)*t0.clone()*(t1.clone()*w.clone() - t4.clone())*(-pw(&(t4.clone()), 2) - t4.clone()*w.clone()*(c::<S>(7)*t1.clone() + c::<S>(9)*t2.clone()) + pw(&(w.clone()), 2)*(pw(&(t1.clone()), 2) + c::<S>(3)*t1.clone()*t2.clone() + pw(&(t2.clone()), 2))) - c::<S>(148)*t2.clone()*t4.clone()*w.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2) + c::<S>(18)*pw(&(t3.clone()), 4) + pw(&(t3.clone()), 2)*(-c::<S>(1600)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(664)*t1.clone()*w.clone() + c::<S>(264)*t2.clone()*w.clone() - c::<S>(1200)*t4.clone()) + (t1.clone()*w.clone() - t4.clone())*(c::<S>(153)*t1.clone()*w.clone() - c::<S>(111)*t2.clone()*w.clone() + c::<S>(200)*t4.clone()))) + pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 9)*t3.clone()*(pw(&(t0.clone()), 2)*(-c::<S>(4352)*t1.clone()*w.clone() - c::<S>(1088)*t2.clone()*w.clone() + c::<S>(3264)*t4.clone()) + t0.clone()*(-c::<S>(480)*pw(&(t3.clone()), 2) + c::<S>(8)*(t1.clone()*w.clone() - t4.clone())*(c::<S>(151)*t1.clone()*w.clone() + c::<S>(98)*t2.clone()*w.clone() - c::<S>(325)*t4.clone())) + (c::<S>(348)*pw(&(t3.clone()), 2) + (t1.clone()*w.clone() - t4.clone())*(c::<S>(90)*t1.clone()*w.clone() - c::<S>(75)*t2.clone()*w.clone() + c::<S>(499)*t4.clone()))*(t1.clone()*w.clone() - t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 10)*(pw(&(t3.clone()), 2)*(c::<S>(800)*pw(&(t0.clone()), 2) + t0.clone()*(-c::<S>(928)*t1.clone()*w.clone() + c::<S>(928)*t4.clone()) + c::<S>(243)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) - (-c::<S>(148)*t1.clone()*w.clone() + c::<S>(148)*t4.clone())*(pw(&(t0.clone()), 2)*(c::<S>(4)*t4.clone() - c::<S>(4)*w.clone()*(c::<S>(2)*t1.clone() + t2.clone())) + t0.clone()*(-c::<S>(2)*t4.clone() + w.clone()*(t1.clone() + t2.clone()))*(c::<S>(2)*t1.clone()*w.clone() - c::<S>(2)*t4.clone()) + t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2))) + r1h.clone()*pw(&(r2h.clone()), 11)*t3.clone()*(t1.clone()*w.clone() - t4.clone())*(c::<S>(1088)*pw(&(t0.clone()), 2) + t0.clone()*(-c::<S>(664)*t1.clone()*w.clone() + c::<S>(664)*t4.clone()) + c::<S>(45)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) + c::<S>(296)*pw(&(r2h.clone()), 12)*t0.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)*(c::<S>(2)*t0.clone() - t1.clone()*w.clone() + t4.clone())
}

fn f2_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(32)*pw(&(r1h.clone()), 10)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(7)*t0.clone() - c::<S>(2)*t2.clone()*w.clone() - c::<S>(2)*t4.clone()) + pw(&(r1h.clone()), 9)*r2h.clone()*t3.clone()*(-c::<S>(128)*pw(&(t0.clone()), 2) - t0.clone()*(c::<S>(36)*t2.clone()*w.clone() + c::<S>(36)*t4.clone()) + c::<S>(15)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) - c::<S>(8)*pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 2)*(pw(&(t0.clone()), 2)*(c::<S>(28)*t1.clone()*w.clone() + c::<S>(56)*t2.clone()*w.clone() + c::<S>(28)*t4.clone()) - t0.clone()*(c::<S>(29)*pw(&(t3.clone()), 2) + (c::<S>(2)*t2.clone()*w.clone() + c::<S>(2)*t4.clone())*(c::<S>(4)*t1.clone()*w.clone() + c::<S>(5)*t2.clone()*w.clone() - c::<S>(13)*t4.clone())) - (-c::<S>(6)*pw(&(t3.clone()), 2) + c::<S>(5)*t4.clone()*(t2.clone()*w.clone() + t4.clone()))*(t2.clone()*w.clone() + t4.clone())) - c::<S>(2)*pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 3)*t3.clone()*(-c::<S>(128)*pw(&(t0.clone()), 2) + t0.clone()*(-c::<S>(98)*t1.clone()*w.clone() + c::<S>(58)*t2.clone()*w.clone() + c::<S>(92)*t4.clone()) + c::<S>(30)*pw(&(t3.clone()), 2) + (c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone())*(c::<S>(2)*t1.clone()*w.clone() - t2.clone()*w.clone() + c::<S>(3)*t4.clone())) - c::<S>(4)*pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 4)*(pw(&(t0.clone()), 2)*(-c::<S>(112)*t1.clone()*w.clone() + c::<S>(112)*t4.clone()) + t0.clone()*(c::<S>(4)*t2.clone()*pw(&(w.clone()), 2)*(c::<S>(6)*t1.clone() + t2.clone()) + c::<S>(36)*pw(&(t4.clone()), 2) - c::<S>(4)*t4.clone()*w.clone()*(c::<S>(8)*t1.clone() + c::<S>(4)*t2.clone())) + pw(&(t3.clone()), 2)*(c::<S>(30)*t0.clone() + c::<S>(9)*t1.clone()*w.clone() + c::<S>(15)*t2.clone()*w.clone() + c::<S>(28)*t4.clone()) + t4.clone()*(c::<S>(10)*t1.clone()*w.clone() - c::<S>(10)*t4.clone())*(t2.clone()*w.clone() + t4.clone())) - pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 5)*t3.clone()*w.clone()*(t1.clone() + t2.clone())*(c::<S>(44)*t0.clone() + c::<S>(3)*t1.clone()*w.clone() - c::<S>(3)*t2.clone()*w.clone() + c::<S>(70)*t4.clone()) + c::<S>(4)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 6)*(pw(&(t0.clone()), 2)*(c::<S>(112)*t2.clone()*w.clone() + c::<S>(112)*t4.clone()) + t0.clone()*(c::<S>(4)*t1.clone()*pw(&(w.clone()), 2)*(t1.clone() + c::<S>(6)*t2.clone()) + c::<S>(36)*pw(&(t4.clone()), 2) + c::<S>(4)*t4.clone()*w.clone()*(c::<S>(4)*t1.clone() + c::<S>(8)*t2.clone())) + pw(&(t3.clone()), 2)*(c::<S>(30)*t0.clone() - c::<S>(15)*t1.clone()*w.clone() - c::<S>(9)*t2.clone()*w.clone() + c::<S>(28)*t4.clone()) + t4.clone()*(c::<S>(10)*t1.clone()*w.clone() - c::<S>(10)*t4.clone())*(t2.clone()*w.clone() + t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 7)*t3.clone()*(-c::<S>(128)*pw(&(t0.clone()), 2) + t0.clone()*(-c::<S>(58)*t1.clone()*w.clone() + c::<S>(98)*t2.clone()*w.clone() + c::<S>(92)*t4.clone()) + c::<S>(30)*pw(&(t3.clone()), 2) - (c::<S>(3)*t1.clone()*w.clone() - c::<S>(3)*t4.clone())*(t1.clone()*w.clone() - c::<S>(2)*t2.clone()*w.clone() + c::<S>(3)*t4.clone())) + c::<S>(8)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 8)*(pw(&(t0.clone()), 2)*(-c::<S>(56)*t1.clone()*w.clone() - c::<S>(28)*t2.clone()*w.clone() + c::<S>(28)*t4.clone()) - t0.clone()*(c::<S>(29)*pw(&(t3.clone()), 2) + (c::<S>(2)*t1.clone()*w.clone() - c::<S>(2)*t4.clone())*(c::<S>(5)*t1.clone()*w.clone() + c::<S>(4)*t2.clone()*w.clone() + c::<S>(13)*t4.clone())) - (c::<S>(6)*pw(&(t3.clone()), 2) + t4.clone()*(c::<S>(5)*t1.clone()*w.clone() - c::<S>(5)*t4.clone()))*(t1.clone()*w.clone() - t4.clone())) + r1h.clone()*pw(&(r2h.clone()), 9)*t3.clone()*(c::<S>(128)*pw(&(t0.clone()), 2) + t0.clone()*(-c::<S>(36)*t1.clone()*w.clone() + c::<S>(36)*t4.clone()) - c::<S>(15)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) + c::<S>(32)*pw(&(r2h.clone()), 10)*t0.clone()*(t1.clone()*w.clone() - t4.clone())*(c::<S>(7)*t0.clone() + c::<S>(2)*t1.clone()*w.clone() - c::<S>(2)*t4.clone())
}

fn f3_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(8)*pw(&(r1h.clone()), 8)*t0.clone()*(c::<S>(2)*t0.clone() + t2.clone()*w.clone() + t4.clone()) - pw(&(r1h.clone()), 7)*r2h.clone()*t3.clone()*(c::<S>(8)*t0.clone() + c::<S>(3)*t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + c::<S>(2)*pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 2)*(pw(&(t3.clone()), 2) - (c::<S>(8)*t0.clone() + c::<S>(4)*t4.clone())*(c::<S>(4)*t0.clone() + t2.clone()*w.clone() + t4.clone())) + pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 3)*t3.clone()*(c::<S>(8)*t0.clone() + c::<S>(3)*t4.clone() + w.clone()*(-t1.clone() - c::<S>(6)*t2.clone())) + c::<S>(4)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 4)*(c::<S>(24)*pw(&(t0.clone()), 2) + t0.clone()*(-c::<S>(2)*t1.clone()*w.clone() + c::<S>(2)*t2.clone()*w.clone() + c::<S>(20)*t4.clone()) - pw(&(t3.clone()), 2) + c::<S>(4)*pw(&(t4.clone()), 2)) + pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 5)*t3.clone()*(c::<S>(8)*t0.clone() + c::<S>(6)*t1.clone()*w.clone() + t2.clone()*w.clone() + c::<S>(3)*t4.clone()) + c::<S>(2)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 6)*(pw(&(t3.clone()), 2) - (c::<S>(8)*t0.clone() + c::<S>(4)*t4.clone())*(c::<S>(4)*t0.clone() - t1.clone()*w.clone() + t4.clone())) + r1h.clone()*pw(&(r2h.clone()), 7)*t3.clone()*(-c::<S>(8)*t0.clone() + c::<S>(3)*t1.clone()*w.clone() - c::<S>(3)*t4.clone()) + c::<S>(8)*pw(&(r2h.clone()), 8)*t0.clone()*(c::<S>(2)*t0.clone() - t1.clone()*w.clone() + t4.clone())
}

fn f4_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    -c::<S>(16)*pw(&(r1h.clone()), 8)*t0.clone()*(t2.clone()*w.clone() + t4.clone()) + pw(&(r1h.clone()), 7)*r2h.clone()*t3.clone()*(-c::<S>(12)*t0.clone() + c::<S>(5)*t2.clone()*w.clone() + c::<S>(5)*t4.clone()) + c::<S>(2)*pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 2)*(pw(&(t3.clone()), 2) + (c::<S>(8)*t0.clone() + c::<S>(4)*t4.clone())*(t2.clone()*w.clone() + t4.clone())) + pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 3)*t3.clone()*(c::<S>(4)*t0.clone() + t1.clone()*w.clone() + c::<S>(2)*t2.clone()*w.clone() + c::<S>(5)*t4.clone()) + pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 5)*t3.clone()*(-c::<S>(4)*t0.clone() + c::<S>(2)*t1.clone()*w.clone() + t2.clone()*w.clone() - c::<S>(5)*t4.clone()) - c::<S>(2)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 6)*(pw(&(t3.clone()), 2) + (c::<S>(8)*t0.clone() + c::<S>(4)*t4.clone())*(-t1.clone()*w.clone() + t4.clone())) + r1h.clone()*pw(&(r2h.clone()), 7)*t3.clone()*(c::<S>(12)*t0.clone() + c::<S>(5)*t1.clone()*w.clone() - c::<S>(5)*t4.clone()) + c::<S>(16)*pw(&(r2h.clone()), 8)*t0.clone()*(-t1.clone()*w.clone() + t4.clone())
}

fn f5_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(32)*pw(&(r1h.clone()), 10)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(-c::<S>(10)*t0.clone() + c::<S>(7)*t2.clone()*w.clone() + c::<S>(7)*t4.clone()) - pw(&(r1h.clone()), 9)*r2h.clone()*t3.clone()*(c::<S>(832)*pw(&(t0.clone()), 2) - t0.clone()*(c::<S>(616)*t2.clone()*w.clone() + c::<S>(616)*t4.clone()) + c::<S>(51)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) - c::<S>(2)*pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 2)*(c::<S>(16)*pw(&(t0.clone()), 2)*(-c::<S>(10)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone() + c::<S>(18)*t4.clone()) + c::<S>(16)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(7)*t1.clone()*w.clone() + c::<S>(2)*t2.clone()*w.clone() - t4.clone()) + pw(&(t3.clone()), 2)*(-c::<S>(312)*t0.clone() + c::<S>(45)*t2.clone()*w.clone() + c::<S>(45)*t4.clone()) + c::<S>(16)*t4.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) + c::<S>(2)*pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 3)*t3.clone()*(c::<S>(128)*pw(&(t0.clone()), 2) - t0.clone()*(c::<S>(132)*t1.clone()*w.clone() + c::<S>(100)*t2.clone()*w.clone() - c::<S>(96)*t4.clone()) - c::<S>(36)*pw(&(t3.clone()), 2) + (c::<S>(4)*t4.clone() + c::<S>(3)*w.clone()*(t1.clone() + t2.clone()))*(c::<S>(7)*t2.clone()*w.clone() + c::<S>(7)*t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 4)*(c::<S>(16)*pw(&(t0.clone()), 2)*(c::<S>(8)*t1.clone()*w.clone() + c::<S>(36)*t2.clone()*w.clone() + c::<S>(28)*t4.clone()) + c::<S>(16)*t0.clone()*(t2.clone()*pw(&(w.clone()), 2)*(c::<S>(7)*t1.clone() - c::<S>(5)*t2.clone()) - c::<S>(8)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(c::<S>(11)*t1.clone() - c::<S>(9)*t2.clone())) + pw(&(t3.clone()), 2)*(-c::<S>(312)*t0.clone() + c::<S>(9)*t1.clone()*w.clone() + c::<S>(126)*t2.clone()*w.clone() + c::<S>(93)*t4.clone()) + c::<S>(16)*t4.clone()*(t1.clone()*w.clone() + t4.clone())*(t2.clone()*w.clone() + t4.clone())) + pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 5)*t3.clone()*(c::<S>(1152)*pw(&(t0.clone()), 2) + c::<S>(8)*t0.clone()*(-c::<S>(202)*t4.clone() + c::<S>(85)*w.clone()*(t1.clone() - t2.clone())) + c::<S>(240)*pw(&(t3.clone()), 2) + c::<S>(86)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(-c::<S>(126)*t1.clone() + c::<S>(126)*t2.clone()) + pw(&(w.clone()), 2)*(c::<S>(9)*pw(&(t1.clone()), 2) - c::<S>(84)*t1.clone()*t2.clone() + c::<S>(9)*pw(&(t2.clone()), 2))) + c::<S>(2)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 6)*(-c::<S>(16)*pw(&(t0.clone()), 2)*(c::<S>(36)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone() - c::<S>(28)*t4.clone()) - c::<S>(16)*t0.clone()*(t1.clone()*pw(&(w.clone()), 2)*(c::<S>(5)*t1.clone() - c::<S>(7)*t2.clone()) + c::<S>(8)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(-c::<S>(9)*t1.clone() + c::<S>(11)*t2.clone())) + pw(&(t3.clone()), 2)*(-c::<S>(312)*t0.clone() - c::<S>(126)*t1.clone()*w.clone() - c::<S>(9)*t2.clone()*w.clone() + c::<S>(93)*t4.clone()) + c::<S>(16)*t4.clone()*(t1.clone()*w.clone() - t4.clone())*(t2.clone()*w.clone() - t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 7)*t3.clone()*(c::<S>(128)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(100)*t1.clone()*w.clone() + c::<S>(132)*t2.clone()*w.clone() + c::<S>(96)*t4.clone()) - c::<S>(36)*pw(&(t3.clone()), 2) + (-c::<S>(4)*t4.clone() + c::<S>(3)*w.clone()*(t1.clone() + t2.clone()))*(c::<S>(7)*t1.clone()*w.clone() - c::<S>(7)*t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 8)*(-c::<S>(16)*pw(&(t0.clone()), 2)*(-c::<S>(8)*t1.clone()*w.clone() + c::<S>(10)*t2.clone()*w.clone() + c::<S>(18)*t4.clone()) - c::<S>(16)*t0.clone()*(t1.clone()*w.clone() - t4.clone())*(c::<S>(2)*t1.clone()*w.clone() + c::<S>(7)*t2.clone()*w.clone() + t4.clone()) + pw(&(t3.clone()), 2)*(c::<S>(312)*t0.clone() + c::<S>(45)*t1.clone()*w.clone() - c::<S>(45)*t4.clone()) - c::<S>(16)*t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) - r1h.clone()*pw(&(r2h.clone()), 9)*t3.clone()*(c::<S>(832)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(616)*t1.clone()*w.clone() - c::<S>(616)*t4.clone()) + c::<S>(51)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) + c::<S>(32)*pw(&(r2h.clone()), 10)*t0.clone()*(t1.clone()*w.clone() - t4.clone())*(c::<S>(10)*t0.clone() + c::<S>(7)*t1.clone()*w.clone() - c::<S>(7)*t4.clone())
}

fn f6_num<S: Scalar>(r1h: &S, r2h: &S, w: &S, t0: &S, t1: &S, t2: &S, t3: &S, t4: &S) -> S {
    let (r1h, r2h, w, t0, t1, t2, t3, t4) = (r1h.clone(), r2h.clone(), w.clone(), t0.clone(), t1.clone(), t2.clone(), t3.clone(), t4.clone());
    c::<S>(8)*pw(&(r1h.clone()), 10)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(c::<S>(2)*t0.clone() + t2.clone()*w.clone() + t4.clone()) + pw(&(r1h.clone()), 9)*r2h.clone()*t3.clone()*(-c::<S>(224)*pw(&(t0.clone()), 2) - t0.clone()*(c::<S>(112)*t2.clone()*w.clone() + c::<S>(112)*t4.clone()) + c::<S>(3)*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) + c::<S>(2)*pw(&(r1h.clone()), 8)*pw(&(r2h.clone()), 2)*(-c::<S>(4)*pw(&(t0.clone()), 2)*(c::<S>(2)*t1.clone()*w.clone() + c::<S>(8)*t2.clone()*w.clone() + c::<S>(6)*t4.clone()) - c::<S>(4)*t0.clone()*(t2.clone()*w.clone() + t4.clone())*(t1.clone()*w.clone() + c::<S>(2)*t2.clone()*w.clone() + c::<S>(5)*t4.clone()) + pw(&(t3.clone()), 2)*(c::<S>(64)*t0.clone() + c::<S>(33)*t2.clone()*w.clone() + c::<S>(33)*t4.clone()) - c::<S>(4)*t4.clone()*pw(&(t2.clone()*w.clone() + t4.clone()), 2)) + c::<S>(2)*pw(&(r1h.clone()), 7)*pw(&(r2h.clone()), 3)*t3.clone()*(c::<S>(448)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(112)*t2.clone()*w.clone() + c::<S>(336)*t4.clone()) - c::<S>(4)*pw(&(t3.clone()), 2) - (-c::<S>(56)*t4.clone() + c::<S>(3)*w.clone()*(t1.clone() + t2.clone()))*(t2.clone()*w.clone() + t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 6)*pw(&(r2h.clone()), 4)*(c::<S>(4)*pw(&(t0.clone()), 2)*(c::<S>(8)*t1.clone()*w.clone() + c::<S>(12)*t2.clone()*w.clone() + c::<S>(4)*t4.clone()) + c::<S>(4)*t0.clone()*(t2.clone()*pw(&(w.clone()), 2)*(t1.clone() + t2.clone()) + c::<S>(4)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(c::<S>(5)*t1.clone() + c::<S>(9)*t2.clone())) - pw(&(t3.clone()), 2)*(c::<S>(64)*t0.clone() + t1.clone()*w.clone() - c::<S>(30)*t2.clone()*w.clone() + c::<S>(33)*t4.clone()) + c::<S>(4)*t4.clone()*(t1.clone()*w.clone() + t4.clone())*(t2.clone()*w.clone() + t4.clone())) + pw(&(r1h.clone()), 5)*pw(&(r2h.clone()), 5)*t3.clone()*(-c::<S>(1344)*pw(&(t0.clone()), 2) + c::<S>(112)*t0.clone()*(t1.clone()*w.clone() - t2.clone()*w.clone() - c::<S>(10)*t4.clone()) + c::<S>(16)*pw(&(t3.clone()), 2) - c::<S>(230)*pw(&(t4.clone()), 2) + t4.clone()*w.clone()*(c::<S>(6)*t1.clone() - c::<S>(6)*t2.clone()) + pw(&(w.clone()), 2)*(c::<S>(3)*pw(&(t1.clone()), 2) + c::<S>(12)*t1.clone()*t2.clone() + c::<S>(3)*pw(&(t2.clone()), 2))) - c::<S>(2)*pw(&(r1h.clone()), 4)*pw(&(r2h.clone()), 6)*(-c::<S>(4)*pw(&(t0.clone()), 2)*(-c::<S>(12)*t1.clone()*w.clone() - c::<S>(8)*t2.clone()*w.clone() + c::<S>(4)*t4.clone()) - c::<S>(4)*t0.clone()*(t1.clone()*pw(&(w.clone()), 2)*(t1.clone() + t2.clone()) + c::<S>(4)*pw(&(t4.clone()), 2) - t4.clone()*w.clone()*(c::<S>(9)*t1.clone() + c::<S>(5)*t2.clone())) + pw(&(t3.clone()), 2)*(c::<S>(64)*t0.clone() + c::<S>(30)*t1.clone()*w.clone() - t2.clone()*w.clone() + c::<S>(33)*t4.clone()) - c::<S>(4)*t4.clone()*(t1.clone()*w.clone() - t4.clone())*(t2.clone()*w.clone() - t4.clone())) - c::<S>(2)*pw(&(r1h.clone()), 3)*pw(&(r2h.clone()), 7)*t3.clone()*(-c::<S>(448)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(112)*t1.clone()*w.clone() - c::<S>(336)*t4.clone()) + c::<S>(4)*pw(&(t3.clone()), 2) + (c::<S>(56)*t4.clone() + c::<S>(3)*w.clone()*(t1.clone() + t2.clone()))*(t1.clone()*w.clone() - t4.clone())) + c::<S>(2)*pw(&(r1h.clone()), 2)*pw(&(r2h.clone()), 8)*(-c::<S>(4)*pw(&(t0.clone()), 2)*(-c::<S>(8)*t1.clone()*w.clone() - c::<S>(2)*t2.clone()*w.clone() + c::<S>(6)*t4.clone()) - c::<S>(4)*t0.clone()*(t1.clone()*w.clone() - t4.clone())*(c::<S>(2)*t1.clone()*w.clone() + t2.clone()*w.clone() - c::<S>(5)*t4.clone()) + pw(&(t3.clone()), 2)*(c::<S>(64)*t0.clone() - c::<S>(33)*t1.clone()*w.clone() + c::<S>(33)*t4.clone()) - c::<S>(4)*t4.clone()*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) + r1h.clone()*pw(&(r2h.clone()), 9)*t3.clone()*(-c::<S>(224)*pw(&(t0.clone()), 2) + t0.clone()*(c::<S>(112)*t1.clone()*w.clone() - c::<S>(112)*t4.clone()) + c::<S>(3)*pw(&(-t1.clone()*w.clone() + t4.clone()), 2)) + c::<S>(8)*pw(&(r2h.clone()), 10)*t0.clone()*(-t1.clone()*w.clone() + t4.clone())*(c::<S>(2)*t0.clone() - t1.clone()*w.clone() + t4.clone())
}


/// Parameters lifted to the coefficient field together with the square roots
/// of the sphere weights (exact mode requires both weights to be rational
/// squares).
#[derive(Clone, Debug)]
pub struct AppendixParams<S> {
    pub r1h: S,
    pub r2h: S,
    pub w: S,
    pub t0: S,
    pub t1: S,
    pub t2: S,
    pub t3: S,
    pub t4: S,
}

impl AppendixParams<f64> {
    pub fn from_model(p: &crate::model::ModelParams) -> Self {
        Self {
            r1h: p.r1.sqrt(),
            r2h: p.r2.sqrt(),
            w: p.w,
            t0: p.t0,
            t1: p.t1,
            t2: p.t2,
            t3: p.t3,
            t4: p.t4,
        }
    }
}

impl<S: Scalar> AppendixParams<S> {
    pub fn r1(&self) -> S {
        self.r1h.clone() * self.r1h.clone()
    }
    pub fn r2(&self) -> S {
        self.r2h.clone() * self.r2h.clone()
    }
    pub fn sqrt_r1r2(&self) -> S {
        self.r1h.clone() * self.r2h.clone()
    }

    /// The ubiquitous denominator `R2 (t4 - w t1) + R1 (w t2 + t4)
    /// + 2 sqrt(R1 R2) t3`, equal to `2 R1 R2` times the raw `N` coefficient.
    pub fn denominator(&self) -> S {
        self.r2() * (self.t4.clone() - self.t1.clone() * self.w.clone())
            + self.r1() * (self.t2.clone() * self.w.clone() + self.t4.clone())
            + c::<S>(2) * self.sqrt_r1r2() * self.t3.clone()
    }
}

/// Raw sixth-order coefficients `a~1..a~9` and the `N` coefficient `b`.
#[derive(Clone, Debug)]
pub struct RawCoefficients<S> {
    pub a_tilde: [S; 9],
    pub b: S,
}

/// Coefficients scaled by `1/b`, putting the `N` coefficient to one.
#[derive(Clone, Debug)]
pub struct ScaledCoefficients<S> {
    pub a: [S; 9],
}

/// Generating-function coefficients `E = e1 MT + e2 NT + e3 ST` and
/// `F = f1 M^2 T + f2 MST + f3 N^2 T + f4 NST + f5 S^2 T + f6 T^3`.
#[derive(Clone, Debug)]
pub struct GeneratingCoefficients<S> {
    pub e: [S; 3],
    pub f: [S; 6],
}

fn check_denominator<S: Scalar>(p: &AppendixParams<S>) -> Result<S, GaudinError> {
    if p.t3.is_zero() {
        return Err(GaudinError::T3Zero);
    }
    let d = p.denominator();
    if d.magnitude() < 1e-12 {
        return Err(GaudinError::SingularDenominator(d.magnitude()));
    }
    Ok(d)
}

/// Direct evaluation of the printed raw coefficients.
pub fn eval_raw_coefficients<S: Scalar>(
    p: &AppendixParams<S>,
) -> Result<RawCoefficients<S>, GaudinError> {
    let d = check_denominator(p)?;
    let (r1, r2) = (p.r1(), p.r2());
    let g = p.sqrt_r1r2();
    let two_r1r2 = c::<S>(2) * r1.clone() * r2.clone();
    let a1 = -(p.w.clone() * (r2.clone() * p.t1.clone() + r1.clone() * p.t2.clone())
        + (r1.clone() - r2.clone()) * p.t4.clone())
        / two_r1r2.clone();
    let b = -(p.w.clone() * (r2.clone() * p.t1.clone() - r1.clone() * p.t2.clone())
        - c::<S>(2) * g.clone() * p.t3.clone()
        - (r1.clone() + r2.clone()) * p.t4.clone())
        / two_r1r2.clone();
    let a2 = -(p.w.clone() * (r2.clone() * p.t1.clone() - r1.clone() * p.t2.clone())
        + c::<S>(2) * g.clone() * p.t3.clone()
        - (r1.clone() + r2.clone()) * p.t4.clone())
        / two_r1r2.clone();
    let args = (&p.r1h, &p.r2h, &p.w, &p.t0, &p.t1, &p.t2, &p.t3, &p.t4);
    let r1r2_sq = pw(&(r1.clone() * r2.clone()), 2);
    let r1r2_cu = pw(&(r1.clone() * r2.clone()), 3);
    let a3 = a3_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(3) * r1r2_sq.clone() * pw(&d, 2));
    let a4 = -((r1.clone() - r2.clone())
        * (c::<S>(2)
            * p.w.clone()
            * p.t0.clone()
            * (r1.clone() * r1.clone() * p.t2.clone()
                + r1.clone() * r2.clone() * (p.t2.clone() - p.t1.clone())
                - r2.clone() * r2.clone() * p.t1.clone())
            + r1.clone() * r2.clone() * p.t3.clone() * p.t3.clone()
            + c::<S>(2) * pw(&(r1.clone() + r2.clone()), 2) * p.t0.clone() * p.t4.clone()))
        / (c::<S>(2) * r1r2_sq.clone() * d.clone());
    let a5 = (c::<S>(2) * r1.clone() * r1.clone() * p.t0.clone()
        + r1.clone() * r2.clone() * (c::<S>(2) * p.t0.clone() + p.t4.clone())
        + c::<S>(2) * r2.clone() * r2.clone() * p.t0.clone())
        / (c::<S>(6) * r1r2_sq.clone());
    let a6 = a6_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(60) * r1r2_cu.clone() * pw(&d, 4));
    let a7 = a7_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(24) * r1r2_cu.clone() * pw(&d, 3));
    let a8 = a8_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(240) * r1r2_cu * pw(&d, 3));
    Ok(RawCoefficients { a_tilde: [a1, a2, a3, a4, a5, a6, a7, a8, S::zero()], b })
}

/// Direct evaluation of the printed generating-function coefficients.
pub fn eval_generating_coefficients<S: Scalar>(
    p: &AppendixParams<S>,
) -> Result<GeneratingCoefficients<S>, GaudinError> {
    let d = check_denominator(p)?;
    let (r1, r2) = (p.r1(), p.r2());
    let g = p.sqrt_r1r2();
    let r1r2 = r1.clone() * r2.clone();
    let args = (&p.r1h, &p.r2h, &p.w, &p.t0, &p.t1, &p.t2, &p.t3, &p.t4);
    let e1 = e1_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(12) * r1r2.clone() * pw(&d, 2));
    let e2 = (g.clone() * r1.clone() * p.t3.clone() - c::<S>(2) * r1.clone() * r1.clone() * p.t0.clone()
        + c::<S>(2) * r1r2.clone() * (c::<S>(2) * p.t0.clone() + p.t4.clone())
        - c::<S>(2) * r2.clone() * r2.clone() * p.t0.clone()
        + g.clone() * r2.clone() * p.t3.clone())
        / (c::<S>(4) * r1r2.clone() * d.clone());
    let e3 = ((r1.clone() - r2.clone())
        * (c::<S>(4) * (r1.clone() + r2.clone()) * p.t0.clone() - g.clone() * p.t3.clone()))
        / (c::<S>(4) * r1r2.clone() * d.clone());
    let r1r2_sq = pw(&r1r2, 2);
    let f1 = f1_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(960) * r1r2_sq.clone() * pw(&d, 4));
    let f2 = f2_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(96) * r1r2_sq.clone() * pw(&d, 3));
    let f3 = f3_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(64) * r1r2_sq.clone() * pw(&d, 2));
    let f4 = f4_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(32) * r1r2_sq.clone() * pw(&d, 2));
    let f5 = f5_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(384) * r1r2_sq.clone() * pw(&d, 3));
    let f6 = f6_num(args.0, args.1, args.2, args.3, args.4, args.5, args.6, args.7)
        / (c::<S>(384) * r1r2_sq * pw(&d, 3));
    Ok(GeneratingCoefficients { e: [e1, e2, e3], f: [f1, f2, f3, f4, f5, f6] })
}

/// Scales the raw coefficients by `1/b`, normalizing the `N` coefficient.
pub fn scale<S: Scalar>(raw: &RawCoefficients<S>) -> Result<ScaledCoefficients<S>, GaudinError> {
    if raw.b.magnitude() < 1e-12 {
        return Err(GaudinError::SingularDenominator(raw.b.magnitude()));
    }
    Ok(ScaledCoefficients {
        a: std::array::from_fn(|i| raw.a_tilde[i].clone() / raw.b.clone()),
    })
}

/// The printed closed form for `a3` at the plus threshold. It equals twice
/// the scaled pipeline coefficient; the sign carries the criticality.
pub fn a3_closed_form<S: Scalar>(p: &AppendixParams<S>) -> Result<S, GaudinError> {
    if p.t3.is_zero() {
        return Err(GaudinError::T3Zero);
    }
    let (r1, r2) = (p.r1(), p.r2());
    let g = p.sqrt_r1r2();
    let dsq = pw(&(r1.clone() - r2.clone()), 2);
    let num = c::<S>(2) * dsq.clone() * (r1.clone() + r2.clone()) * p.t0.clone()
        + c::<S>(2) * r1.clone() * r2.clone() * p.w.clone()
            * (r1.clone() * p.t2.clone() - r2.clone() * p.t1.clone())
        + dsq * g.clone() * p.t3.clone();
    let den = c::<S>(8) * pw(&(r1 * r2), 1) * g * (p.r1() + p.r2()) * p.t3.clone();
    Ok(num / den)
}

/// The printed closed form for `a6` on the degeneracy locus (`a3 = 0`).
pub fn a6_closed_form<S: Scalar>(p: &AppendixParams<S>) -> Result<S, GaudinError> {
    let (r1, r2) = (p.r1(), p.r2());
    let dsq = pw(&(r1.clone() - r2.clone()), 2);
    let num = dsq.clone()
        * (r1.clone() * r2.clone() * p.w.clone()
            * (r1.clone() * (p.t1.clone() + c::<S>(2) * p.t2.clone())
                - r2.clone() * (c::<S>(2) * p.t1.clone() + p.t2.clone()))
            + (r1.clone() + r2.clone()) * dsq.clone() * p.t0.clone());
    let den_core = r1.clone() * r2.clone() * p.w.clone()
        * (r1.clone() * p.t2.clone() - r2.clone() * p.t1.clone())
        + (r1.clone() + r2.clone()) * dsq * p.t0.clone();
    if den_core.magnitude() < 1e-14 {
        return Err(GaudinError::SingularDenominator(den_core.magnitude()));
    }
    let den = c::<S>(384) * pw(&(r1 * r2), 2) * den_core;
    Ok(num / den)
}

/// The `t3` value putting the plus threshold on the degeneracy locus
/// (`a3 = 0`); requires distinct sphere weights.
pub fn t3_degenerate<S: Scalar>(p: &AppendixParams<S>) -> Result<S, GaudinError> {
    let (r1, r2) = (p.r1(), p.r2());
    let dsq = pw(&(r1.clone() - r2.clone()), 2);
    if dsq.is_zero() || dsq.magnitude() < 1e-14 {
        return Err(GaudinError::domain(
            "t3_degenerate",
            "the degeneracy locus requires R1 != R2",
        ));
    }
    let g = p.sqrt_r1r2();
    let num = -c::<S>(2)
        * ((r1.clone() + r2.clone()) * dsq.clone() * p.t0.clone()
            - p.w.clone() * r1 * r2 * (p.r2() * p.t1.clone() - p.r1() * p.t2.clone()));
    Ok(num / (dsq * g))
}
