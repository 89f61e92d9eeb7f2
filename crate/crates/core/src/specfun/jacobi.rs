use crate::{Error, Result};

const MAX_LANDEN_STEPS: usize = 32;
// One more AGM step past this squares the relative gap below 1e-16.
const AGM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Simultaneous `sn(z|m)`, `cn(z|m)`, `dn(z|m)`.
///
/// Descending Landen transformation on the complementary parameter until the
/// transformed parameter vanishes to working precision, circular functions of
/// the rescaled argument, then Bulirsch's backward recursion for `dn` and the
/// ratio `cn/sn`. The hyperbolic closed forms are used at `m = 1`.
pub fn jacobi_sn_cn_dn(z: f64, m: f64) -> Result<JacobiTriple> {
    if !(0.0..=1.0).contains(&m) {
        return Err(Error::domain("elliptic parameter", m));
    }
    if !z.is_finite() {
        return Err(Error::domain("jacobi argument", z));
    }
    if m == 0.0 {
        let (sn, cn) = z.sin_cos();
        return Ok(JacobiTriple { sn, cn, dn: 1.0 });
    }
    if m == 1.0 {
        let sech = 1.0 / z.cosh();
        return Ok(JacobiTriple {
            sn: z.tanh(),
            cn: sech,
            dn: sech,
        });
    }

    let mut em = [0.0; MAX_LANDEN_STEPS];
    let mut en = [0.0; MAX_LANDEN_STEPS];
    let mut emc = 1.0 - m;
    let mut a = 1.0;
    let mut c = 1.0;
    let mut levels = 0;
    for i in 0..MAX_LANDEN_STEPS {
        levels = i + 1;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= AGM_TOL * a {
            break;
        }
        emc *= a;
        a = c;
    }

    let u = z * c;
    let (mut sn, mut cn) = u.sin_cos();
    let mut dn = 1.0;
    if sn != 0.0 {
        let mut a = cn / sn;
        c *= a;
        for i in (0..levels).rev() {
            let b = em[i];
            a *= c;
            c *= dn;
            dn = (en[i] + a) / (b + a);
            a = c / b;
        }
        let s = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { s } else { -s };
        cn = c * sn;
    }
    Ok(JacobiTriple { sn, cn, dn })
}
