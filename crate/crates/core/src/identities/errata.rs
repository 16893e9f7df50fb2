//! Printed forms known to fail, with the corrected form that holds.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ErrataEntry {
    pub case: &'static str,
    pub claim: &'static str,
    /// Name of the variant expected to pass; empty for notes without a verdict.
    pub variant: &'static str,
    pub note: &'static str,
}

pub fn errata_manifest() -> Vec<ErrataEntry> {
    vec![
        ErrataEntry {
            case: "I1",
            claim: "shifted (n-1)-sum",
            variant: "zero-mode restored",
            note: "reindexing l -> l+1 discards the l=0 term of the l/(1-q^l) sum; the printed sign (-1)^{l+1} is right, \
                   but the sum equals the closed form minus (q-1)/L/(1-q)^n. It matches the closed form whose zero-mode is dropped.",
        },
        ErrataEntry {
            case: "I12",
            claim: "difference equation",
            variant: "x-dependent second term",
            note: "the subtracted term must be read as beta_n(x); with beta_n(0) the identity fails for every n >= 1",
        },
        ErrataEntry {
            case: "I12",
            claim: "recurrence at x=0",
            variant: "order-zero correction",
            note: "at n=0 the left side is (h-1)(q-1), not 0; the kronecker form holds only for h=1 or n>=1",
        },
        ErrataEntry {
            case: "I12",
            claim: "shifted-order recurrence",
            variant: "order-zero correction",
            note: "same n=0 defect as the x=0 recurrence it is derived from",
        },
        ErrataEntry {
            case: "I14",
            claim: "residue-weighted distribution",
            variant: "[f]^{n-1} normalisation",
            note: "the printed 1/[f]_q prefactor and [i]_q^n weight are wrong; [f]^{n-1} sum q^{(h-1)i} beta_{n,q^f}((x+i)/f) holds",
        },
        ErrataEntry {
            case: "I19",
            claim: "second rule",
            variant: "exponent n-k+1",
            note: "the printed exponent n-k fails; n-k+1 holds",
        },
        ErrataEntry {
            case: "I11",
            claim: "twisted series",
            variant: "zero-mode dropped",
            note: "for |q|<1 the convergent series equals the closed form with the l=0 term set to 0; \
                   the p-adic Riemann sums instead converge to the closed form with the (q-1)/L zero-mode",
        },
        ErrataEntry {
            case: "I11",
            claim: "h-twisted series",
            variant: "zero-mode dropped",
            note: "the zero-mode appears only at h=1; for h <= 0 the series diverges when |q|<1, so only h >= 1 is checked",
        },
        ErrataEntry {
            case: "I11",
            claim: "generating function",
            variant: "zero-mode dropped",
            note: "the coefficients of -t sum q^{x+m} e^{[x+m]t} reproduce the series, hence the same zero-mode reading",
        },
        ErrataEntry {
            case: "I11",
            claim: "character series",
            variant: "with q^{x+m} factor",
            note: "the printed series -n sum chi(m)[x+m]^{n-1} lacks the q^{x+m} factor of the plain case; with it the series matches",
        },
        ErrataEntry {
            case: "I11",
            claim: "character generating function",
            variant: "with q^{x+m} factor",
            note: "-t sum chi(m) e^{[x+m]t} lacks the same factor; -t sum chi(m) q^{x+m} e^{[x+m]t} generates the character family",
        },
        ErrataEntry {
            case: "I9",
            claim: "order-r integrand",
            variant: "",
            note: "the integrand exponent -(r-1)x_r of the (0,r) polynomials should read -(r+1)x_r; \
                   the closed form is checked, the integrand is not evaluated",
        },
    ]
}
