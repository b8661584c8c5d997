//! Concrete groups: multiplication, inversion, enumeration, and the
//! self-checks that validate the normal-form tables at build time.

use super::descriptor::{modpow, GroupDescriptor, QFamily};
use super::element::{check_shape, element_key, Element};
use super::AlgebraError;

/// The action matrix of the order-351 group: right multiplication by the
/// companion matrix of `X^3 - X - 1` over `F_3`.
pub const W_MATRIX: [[u8; 3]; 3] = [[0, 1, 0], [0, 0, 1], [1, 1, 0]];

enum Tables {
    Qp {
        dims: [u16; 3],
        /// `α(q)` indexed by the q-part index; `α` is the action
        /// homomorphism `Q → Z_p^×`.
        alpha: Vec<u32>,
    },
    Z13 {
        /// `w_pow[t]` is the matrix of `W^t`.
        w_pow: [[[u8; 3]; 3]; 13],
    },
}

/// An immutable group of order `27p` (or 351). All operations are pure;
/// the value is safe to share across threads.
pub struct Group {
    desc: GroupDescriptor,
    p: u32,
    order: usize,
    tables: Tables,
}

impl Group {
    /// Builds the group and validates its multiplication tables: the full
    /// `27^3` associativity sweep over the `Q` part, identity and inverse
    /// laws, generator orders, and the homomorphism property of the action.
    pub fn build(desc: GroupDescriptor) -> Result<Group, AlgebraError> {
        desc.validate()?;
        let g = match desc {
            GroupDescriptor::QSemidirect { family, p, action } => {
                let dims = family.dims();
                let mut alpha = vec![1u32; 27];
                for qi in 0..27 {
                    let q = unpack_q(dims, qi);
                    let mut a = 1u64;
                    for i in 0..3 {
                        a = a * modpow(action[i], q[i] as u32, p) as u64 % p as u64;
                    }
                    alpha[qi] = a as u32;
                }
                Group {
                    desc,
                    p,
                    order: 27 * p as usize,
                    tables: Tables::Qp { dims, alpha },
                }
            }
            GroupDescriptor::Z13OnE27 => {
                let mut w_pow = [[[0u8; 3]; 3]; 13];
                w_pow[0] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
                for t in 1..13 {
                    w_pow[t] = mat_mul_f3(&w_pow[t - 1], &W_MATRIX);
                }
                Group { desc, p: 13, order: 351, tables: Tables::Z13 { w_pow } }
            }
        };
        g.self_check()?;
        Ok(g)
    }

    fn self_check(&self) -> Result<(), AlgebraError> {
        let bad = |msg: &str| AlgebraError::InvalidAction(format!("self-check failed: {msg}"));
        match &self.tables {
            Tables::Qp { dims, alpha } => {
                let f = self.q_family();
                // q-part group axioms, all 27^3 triples
                for a in 0..27 {
                    let qa = unpack_q(*dims, a);
                    if self.q_mul(qa, self.q_inv(qa)) != [0, 0, 0] {
                        return Err(bad("q inverse law"));
                    }
                    for b in 0..27 {
                        let qb = unpack_q(*dims, b);
                        let ab = self.q_mul(qa, qb);
                        for c in 0..27 {
                            let qc = unpack_q(*dims, c);
                            if self.q_mul(ab, qc) != self.q_mul(qa, self.q_mul(qb, qc)) {
                                return Err(bad("q associativity"));
                            }
                        }
                        // α must be a homomorphism for the semidirect
                        // product to be associative
                        let lhs = alpha[pack_q(*dims, ab)] as u64;
                        let rhs = alpha[a] as u64 * alpha[b] as u64 % self.p as u64;
                        if lhs != rhs {
                            return Err(bad("action homomorphism"));
                        }
                    }
                }
                // presentation spot checks
                let x = Element::Qp { q: [1, 0, 0], m: 0 };
                match f {
                    QFamily::Heis27 => {
                        let y = Element::Qp { q: [0, 1, 0], m: 0 };
                        let z = Element::Qp { q: [0, 0, 1], m: 0 };
                        if self.commutator(&x, &y) != z {
                            return Err(bad("[x,y] = z in heis27"));
                        }
                        if self.elem_order(&x) != 3 || self.elem_order(&z) != 3 {
                            return Err(bad("heis27 exponent"));
                        }
                    }
                    QFamily::Mod27 => {
                        let y = Element::Qp { q: [0, 1, 0], m: 0 };
                        let x3 = Element::Qp { q: [3, 0, 0], m: 0 };
                        if self.commutator(&x, &y) != x3 {
                            return Err(bad("[x,y] = x^3 in mod27"));
                        }
                        if self.elem_order(&x) != 9 || self.elem_order(&y) != 3 {
                            return Err(bad("mod27 generator orders"));
                        }
                    }
                    _ => {}
                }
            }
            Tables::Z13 { w_pow } => {
                if w_pow[12] != mat_mul_f3(&w_pow[1], &w_pow[11]) {
                    return Err(bad("w power table"));
                }
                if mat_mul_f3(&w_pow[1], &w_pow[12])
                    != [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
                {
                    return Err(bad("W has order 13"));
                }
                // W^3 = W + I, the minimal polynomial relation
                let w3 = w_pow[3];
                for r in 0..3 {
                    for c in 0..3 {
                        let want = (w_pow[1][r][c] + u8::from(r == c)) % 3;
                        if w3[r][c] != want {
                            return Err(bad("W^3 = W + I"));
                        }
                    }
                }
                // sampled associativity on a generator-heavy slice
                let probes = [
                    Element::Z13 { t: 1, v: [0, 0, 0] },
                    Element::Z13 { t: 5, v: [1, 0, 0] },
                    Element::Z13 { t: 12, v: [2, 1, 0] },
                    Element::Z13 { t: 3, v: [0, 2, 2] },
                    Element::Z13 { t: 7, v: [1, 1, 1] },
                ];
                for a in &probes {
                    for b in &probes {
                        for c in &probes {
                            let lhs = self.mul(&self.mul(a, b), c);
                            let rhs = self.mul(a, &self.mul(b, c));
                            if lhs != rhs {
                                return Err(bad("z13 associativity"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.desc
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The odd prime `p` with `|G| = 27p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q_family(&self) -> QFamily {
        match &self.desc {
            GroupDescriptor::QSemidirect { family, .. } => *family,
            GroupDescriptor::Z13OnE27 => QFamily::E27,
        }
    }

    pub fn identity(&self) -> Element {
        match &self.tables {
            Tables::Qp { .. } => Element::Qp { q: [0, 0, 0], m: 0 },
            Tables::Z13 { .. } => Element::Z13 { t: 0, v: [0, 0, 0] },
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// Enumeration order: q-part index (coordinates lexicographic) major,
    /// `Z_p` residue minor; `Z_13` elements by `t` major, vector minor.
    /// Agrees with `Element`'s derived `Ord`.
    pub fn element_at(&self, idx: usize) -> Element {
        debug_assert!(idx < self.order);
        match &self.tables {
            Tables::Qp { dims, .. } => {
                let p = self.p as usize;
                let q = unpack_q(*dims, idx / p);
                Element::Qp { q, m: (idx % p) as u16 }
            }
            Tables::Z13 { .. } => {
                let t = (idx / 27) as u8;
                let r = idx % 27;
                Element::Z13 {
                    t,
                    v: [(r / 9) as u8, (r / 3 % 3) as u8, (r % 3) as u8],
                }
            }
        }
    }

    pub fn index_of(&self, e: &Element) -> usize {
        match (&self.tables, e) {
            (Tables::Qp { dims, .. }, Element::Qp { q, m }) => {
                pack_q(*dims, *q) * self.p as usize + *m as usize
            }
            (Tables::Z13 { .. }, Element::Z13 { t, v }) => {
                *t as usize * 27 + v[0] as usize * 9 + v[1] as usize * 3 + v[2] as usize
            }
            _ => panic!("element from the wrong family"),
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        check_shape(&self.desc, e).is_ok()
    }

    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        check_shape(&self.desc, a)?;
        check_shape(&self.desc, b)?;
        Ok(self.mul_unchecked(a, b))
    }

    /// Group product. Panics if an element belongs to another family; use
    /// [`Group::try_mul`] at trust boundaries.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        debug_assert!(self.contains(a) && self.contains(b));
        self.mul_unchecked(a, b)
    }

    fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        match (&self.tables, a, b) {
            (Tables::Qp { dims: _, alpha, .. }, Element::Qp { q: q1, m: m1 }, Element::Qp { q: q2, m: m2 }) => {
                let q = self.q_mul(*q1, *q2);
                let a2 = alpha[self.q_index(*q2)] as u64;
                let m = (*m1 as u64 * a2 + *m2 as u64) % self.p as u64;
                Element::Qp { q, m: m as u16 }
            }
            (Tables::Z13 { w_pow }, Element::Z13 { t: t1, v: v1 }, Element::Z13 { t: t2, v: v2 }) => {
                let t = (t1 + t2) % 13;
                let moved = vec_mat_f3(v1, &w_pow[*t2 as usize]);
                let v = [
                    (moved[0] + v2[0]) % 3,
                    (moved[1] + v2[1]) % 3,
                    (moved[2] + v2[2]) % 3,
                ];
                Element::Z13 { t, v }
            }
            _ => panic!("element from the wrong family"),
        }
    }

    pub fn try_inv(&self, a: &Element) -> Result<Element, AlgebraError> {
        check_shape(&self.desc, a)?;
        Ok(self.inv(a))
    }

    pub fn inv(&self, a: &Element) -> Element {
        debug_assert!(self.contains(a));
        match (&self.tables, a) {
            (Tables::Qp { alpha, .. }, Element::Qp { q, m }) => {
                let qi = self.q_inv(*q);
                let a_inv = alpha[self.q_index(qi)] as u64;
                let m = (self.p as u64 - *m as u64 * a_inv % self.p as u64) % self.p as u64;
                Element::Qp { q: qi, m: m as u16 }
            }
            (Tables::Z13 { w_pow }, Element::Z13 { t, v }) => {
                let ti = (13 - t) % 13;
                let moved = vec_mat_f3(v, &w_pow[ti as usize]);
                let vi = [(3 - moved[0]) % 3, (3 - moved[1]) % 3, (3 - moved[2]) % 3];
                Element::Z13 { t: ti, v: vi }
            }
            _ => panic!("element from the wrong family"),
        }
    }

    pub fn pow(&self, a: &Element, n: i64) -> Element {
        let (mut base, mut e) = if n < 0 {
            (self.inv(a), (-n) as u64)
        } else {
            (*a, n as u64)
        };
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn elem_order(&self, a: &Element) -> usize {
        let e = self.identity();
        let mut cur = *a;
        let mut n = 1;
        while cur != e {
            cur = self.mul(&cur, a);
            n += 1;
        }
        n
    }

    /// `a^b = b^{-1} a b`.
    pub fn conjugate(&self, a: &Element, b: &Element) -> Element {
        self.mul(&self.mul(&self.inv(b), a), b)
    }

    /// `[a,b] = a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.mul(&self.mul(&self.inv(a), &self.inv(b)), &self.mul(a, b))
    }

    // --- q-part helpers -------------------------------------------------

    fn q_index(&self, q: [u8; 3]) -> usize {
        match &self.tables {
            Tables::Qp { dims, .. } => pack_q(*dims, q),
            Tables::Z13 { .. } => unreachable!(),
        }
    }

    fn q_mul(&self, a: [u8; 3], b: [u8; 3]) -> [u8; 3] {
        match self.q_family() {
            QFamily::Z27 => [(a[0] + b[0]) % 27, 0, 0],
            QFamily::Z9xZ3 => [(a[0] + b[0]) % 9, (a[1] + b[1]) % 3, 0],
            QFamily::E27 => [
                (a[0] + b[0]) % 3,
                (a[1] + b[1]) % 3,
                (a[2] + b[2]) % 3,
            ],
            // [x,y] = z central: moving y^j past x^i costs z^{-ji}
            QFamily::Heis27 => [
                (a[0] + b[0]) % 3,
                (a[1] + b[1]) % 3,
                (a[2] + b[2] + 3 * 3 - (a[1] * b[0]) % 3) % 3,
            ],
            // y^{-1} x y = x^4, so y^j x^i = x^{i 7^j} y^j
            QFamily::Mod27 => [
                ((a[0] as u16 + b[0] as u16 * POW7[a[1] as usize]) % 9) as u8,
                (a[1] + b[1]) % 3,
                0,
            ],
        }
    }

    fn q_inv(&self, a: [u8; 3]) -> [u8; 3] {
        match self.q_family() {
            QFamily::Z27 => [(27 - a[0]) % 27, 0, 0],
            QFamily::Z9xZ3 => [(9 - a[0]) % 9, (3 - a[1]) % 3, 0],
            QFamily::E27 => [(3 - a[0]) % 3, (3 - a[1]) % 3, (3 - a[2]) % 3],
            QFamily::Heis27 => {
                let i = (3 - a[0]) % 3;
                let j = (3 - a[1]) % 3;
                let k = (3 + 3 - a[2] - (a[1] * a[0]) % 3) % 3;
                [i, j, k]
            }
            QFamily::Mod27 => {
                let j = (3 - a[1]) % 3;
                let i = (9 - (a[0] as u16 * POW7[j as usize]) % 9) % 9;
                [i as u8, j, 0]
            }
        }
    }

    /// Action unit `α(q-part of g)`; 1 for the trivial action.
    pub fn action_of(&self, g: &Element) -> u32 {
        match (&self.tables, g) {
            (Tables::Qp { alpha, .. }, Element::Qp { q, .. }) => alpha[self.q_index(*q)],
            _ => panic!("action units belong to the semidirect families"),
        }
    }

    /// Order of the image of `g` in `G/P`, where `P` is the Sylow
    /// `p`-subgroup. The q-part multiplies independently of the residue,
    /// so this is the order of the q-part alone.
    pub fn q_order(&self, g: &Element) -> usize {
        match g {
            Element::Qp { q, .. } => {
                let mut cur = *q;
                let mut n = 1;
                while cur != [0, 0, 0] {
                    cur = self.q_mul(cur, *q);
                    n += 1;
                }
                n
            }
            Element::Z13 { t, .. } => {
                if *t == 0 {
                    1
                } else {
                    13 / gcd(13, *t as usize)
                }
            }
        }
    }

    /// Images of two elements in `G/P` coincide.
    pub fn q_eq(&self, a: &Element, b: &Element) -> bool {
        match (a, b) {
            (Element::Qp { q: qa, .. }, Element::Qp { q: qb, .. }) => qa == qb,
            (Element::Z13 { t: ta, .. }, Element::Z13 { t: tb, .. }) => ta == tb,
            _ => false,
        }
    }

    // --- named generators -----------------------------------------------

    /// Generator named in the family presentation (`x`, `y`, or `z`).
    pub fn q_gen(&self, name: &str) -> Option<Element> {
        match &self.desc {
            GroupDescriptor::QSemidirect { family, .. } => {
                let slot = family.generator_names().iter().position(|n| *n == name)?;
                let mut q = [0u8; 3];
                q[slot] = 1;
                Some(Element::Qp { q, m: 0 })
            }
            GroupDescriptor::Z13OnE27 => None,
        }
    }

    /// Generator of the Sylow `p`-subgroup.
    pub fn gen_w(&self) -> Element {
        match &self.tables {
            Tables::Qp { .. } => Element::Qp { q: [0, 0, 0], m: 1 },
            Tables::Z13 { .. } => Element::Z13 { t: 1, v: [0, 0, 0] },
        }
    }

    /// The vector `(1,0,0)` of the order-351 group.
    pub fn gen_v(&self) -> Option<Element> {
        match &self.tables {
            Tables::Z13 { .. } => Some(Element::Z13 { t: 0, v: [1, 0, 0] }),
            Tables::Qp { .. } => None,
        }
    }

    pub fn make_qp(&self, q: [i64; 3], m: i64) -> Element {
        match &self.tables {
            Tables::Qp { dims, .. } => {
                let mut out = [0u8; 3];
                for i in 0..3 {
                    let d = dims[i] as i64;
                    out[i] = (q[i].rem_euclid(d)) as u8;
                }
                Element::Qp { q: out, m: m.rem_euclid(self.p as i64) as u16 }
            }
            Tables::Z13 { .. } => panic!("make_qp on the z13 family"),
        }
    }

    pub fn make_z13(&self, t: i64, v: [i64; 3]) -> Element {
        match &self.tables {
            Tables::Z13 { .. } => Element::Z13 {
                t: t.rem_euclid(13) as u8,
                v: [
                    v[0].rem_euclid(3) as u8,
                    v[1].rem_euclid(3) as u8,
                    v[2].rem_euclid(3) as u8,
                ],
            },
            Tables::Qp { .. } => panic!("make_z13 on a semidirect family"),
        }
    }

    pub fn element_key(&self, e: &Element) -> String {
        element_key(&self.desc, e)
    }

    pub fn element_to_json(&self, e: &Element) -> serde_json::Value {
        e.to_json(&self.desc)
    }

    pub fn element_from_json(&self, v: &serde_json::Value) -> Result<Element, AlgebraError> {
        Element::from_json(&self.desc, v)
    }
}

const POW7: [u16; 3] = [1, 7, 4]; // 7^j mod 9

fn pack_q(dims: [u16; 3], q: [u8; 3]) -> usize {
    ((q[0] as usize * dims[1] as usize) + q[1] as usize) * dims[2] as usize + q[2] as usize
}

fn unpack_q(dims: [u16; 3], mut idx: usize) -> [u8; 3] {
    let k = idx % dims[2] as usize;
    idx /= dims[2] as usize;
    let j = idx % dims[1] as usize;
    idx /= dims[1] as usize;
    [idx as u8, j as u8, k as u8]
}

fn mat_mul_f3(a: &[[u8; 3]; 3], b: &[[u8; 3]; 3]) -> [[u8; 3]; 3] {
    let mut out = [[0u8; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = 0u16;
            for k in 0..3 {
                acc += a[r][k] as u16 * b[k][c] as u16;
            }
            out[r][c] = (acc % 3) as u8;
        }
    }
    out
}

fn vec_mat_f3(v: &[u8; 3], m: &[[u8; 3]; 3]) -> [u8; 3] {
    let mut out = [0u8; 3];
    for c in 0..3 {
        let mut acc = 0u16;
        for k in 0..3 {
            acc += v[k] as u16 * m[k][c] as u16;
        }
        out[c] = (acc % 3) as u8;
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Trial-division primality, plenty for the desk-scale range.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The two primitive cube roots of unity mod `p`, smallest first.
///
/// Both satisfy `r^3 = 1`, `r != 1`, and `r^2 + r + 1 = 0 (mod p)`; they
/// exist exactly when `p = 1 (mod 3)`.
pub fn find_primitive_cube_roots(p: u32) -> Result<(u32, u32), AlgebraError> {
    if !is_prime(p) || p < 5 {
        return Err(AlgebraError::InvalidPrime(p));
    }
    if p % 3 != 1 {
        return Err(AlgebraError::NoCubeRoot(p));
    }
    let mut roots = (2..p).filter(|&r| modpow(r, 3, p) == 1);
    let r1 = roots.next().expect("p = 1 mod 3 guarantees a primitive root");
    let r2 = roots.next().expect("the square of the first root");
    debug_assert!(roots.next().is_none());
    debug_assert_eq!((r1 as u64 * r1 as u64 + r1 as u64 + 1) % p as u64, 0);
    debug_assert_eq!((r2 as u64 * r2 as u64 + r2 as u64 + 1) % p as u64, 0);
    Ok((r1, r2))
}

#[cfg(test)]
mod tests {
    use super::super::descriptor::GroupDescriptor;
    use super::*;

    fn heis7() -> Group {
        Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap()
    }

    fn mod27_direct() -> Group {
        Group::build(GroupDescriptor::direct_product(QFamily::Mod27, 7)).unwrap()
    }

    #[test]
    fn cube_roots() {
        // frozen from brute-forcing k^3 mod p over k = 1..p-1
        assert_eq!(find_primitive_cube_roots(7).unwrap(), (2, 4));
        assert_eq!(find_primitive_cube_roots(13).unwrap(), (3, 9));
        assert_eq!(find_primitive_cube_roots(19).unwrap(), (7, 11));
        assert_eq!(find_primitive_cube_roots(31).unwrap(), (5, 25));
        assert_eq!(find_primitive_cube_roots(5), Err(AlgebraError::NoCubeRoot(5)));
        assert_eq!(find_primitive_cube_roots(9), Err(AlgebraError::InvalidPrime(9)));
    }

    #[test]
    fn cube_root_identity_for_many_primes() {
        for p in (5..200).filter(|&p| is_prime(p)) {
            match find_primitive_cube_roots(p) {
                Ok((r1, r2)) => {
                    assert_eq!(p % 3, 1);
                    for r in [r1, r2] {
                        assert_eq!(modpow(r, 3, p), 1);
                        assert_ne!(r, 1);
                        assert_eq!((r as u64 * r as u64 + r as u64 + 1) % p as u64, 0);
                    }
                    // the two roots are r and r^2
                    assert_eq!(r2, modpow(r1, 2, p));
                }
                Err(AlgebraError::NoCubeRoot(_)) => assert_ne!(p % 3, 1),
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    /// Faithful matrix model of the exponent-3 group: upper unitriangular
    /// 3x3 matrices over F_3 with x = I + E12, y = I + E23, z = I + E13.
    fn heis_model(q: [u8; 3]) -> [[u8; 3]; 3] {
        let (i, j, k) = (q[0] as u16, q[1] as u16, q[2] as u16);
        [
            [1, i as u8, ((k + i * j) % 3) as u8],
            [0, 1, j as u8],
            [0, 0, 1],
        ]
    }

    #[test]
    fn heis27_matches_matrix_model() {
        let g = heis7();
        for a in 0..27 {
            for b in 0..27 {
                let ea = g.element_at(a * 7);
                let eb = g.element_at(b * 7);
                let (Element::Qp { q: qa, .. }, Element::Qp { q: qb, .. }) = (ea, eb) else {
                    unreachable!()
                };
                let prod = g.mul(&ea, &eb);
                let Element::Qp { q: qp, .. } = prod else { unreachable!() };
                let m = mat_mul_f3(&heis_model(qa), &heis_model(qb));
                // coordinates back out of the matrix: i = m[0][1], j = m[1][2],
                // k = m[0][2] - i*j
                let i = m[0][1];
                let j = m[1][2];
                let k = (m[0][2] + 9 - i * j) % 3;
                assert_eq!(qp, [i, j, k]);
            }
        }
    }

    /// Faithful model of the exponent-9 group: matrices [[u, v],[0,1]] over
    /// Z_9 with u a cube root of 1 mod 9; x = (1,1), y = (7,0).
    fn mod27_model(q: [u8; 3]) -> (u16, u16) {
        let pow7 = [1u16, 7, 4];
        (pow7[q[1] as usize], q[0] as u16)
    }

    #[test]
    fn mod27_matches_affine_model() {
        let g = mod27_direct();
        for a in 0..27 {
            for b in 0..27 {
                let ea = g.element_at(a * 7);
                let eb = g.element_at(b * 7);
                let (Element::Qp { q: qa, .. }, Element::Qp { q: qb, .. }) = (ea, eb) else {
                    unreachable!()
                };
                let Element::Qp { q: qp, .. } = g.mul(&ea, &eb) else { unreachable!() };
                let (u1, v1) = mod27_model(qa);
                let (u2, v2) = mod27_model(qb);
                let prod = ((u1 * u2) % 9, (u1 * v2 + v1) % 9);
                assert_eq!(mod27_model(qp), prod);
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        // y * x = x y z^{-1}
        assert_eq!(g.mul(&y, &x), Element::Qp { q: [1, 1, 2], m: 0 });
        let m = mod27_direct();
        let x9 = m.q_gen("x").unwrap();
        let y9 = m.q_gen("y").unwrap();
        // y * x = x^7 y
        assert_eq!(m.mul(&y9, &x9), Element::Qp { q: [7, 1, 0], m: 0 });
        assert_eq!(m.conjugate(&x9, &y9), Element::Qp { q: [4, 0, 0], m: 0 });
        assert_eq!(g.commutator(&x, &y), g.q_gen("z").unwrap());
        for e in g.elements().take(40) {
            assert_eq!(g.mul(&e, &g.identity()), e);
            assert_eq!(g.mul(&g.inv(&e), &e), g.identity());
        }
    }

    #[test]
    fn z13_inverse_matches_listings() {
        let g = Group::build(GroupDescriptor::Z13OnE27).unwrap();
        let w = g.gen_w();
        let v = g.gen_v().unwrap();
        // b = w^2 (1,0,0)  =>  b^{-1} = w^{11} (-1,-1,1)
        let b = g.mul(&g.pow(&w, 2), &v);
        assert_eq!(g.inv(&b), g.make_z13(11, [-1, -1, 1]));
        // b = w^3 (1,0,0)  =>  b^{-1} = w^{10} (0,1,-1)
        let b = g.mul(&g.pow(&w, 3), &v);
        assert_eq!(g.inv(&b), g.make_z13(10, [0, 1, -1]));
        // b = w^5 (1,0,0)  =>  b^{-1} = w^8 (1,0,1)
        let b = g.mul(&g.pow(&w, 5), &v);
        assert_eq!(g.inv(&b), g.make_z13(8, [1, 0, 1]));
        // b = w^6 (1,0,0)  =>  b^{-1} = w^7 (-1,1,1)
        let b = g.mul(&g.pow(&w, 6), &v);
        assert_eq!(g.inv(&b), g.make_z13(7, [-1, 1, 1]));
    }

    #[test]
    fn orders() {
        let g = heis7();
        assert_eq!(g.elem_order(&g.q_gen("x").unwrap()), 3);
        assert_eq!(g.elem_order(&g.gen_w()), 7);
        let m = mod27_direct();
        assert_eq!(m.elem_order(&m.q_gen("x").unwrap()), 9);
        // exponent 3: every element of heis27 x trivial p-part cubes to e
        for e in g.elements() {
            if let Element::Qp { m: 0, .. } = e {
                assert_eq!(g.pow(&e, 3), g.identity());
            }
        }
        // 18 elements of order 9 in mod27
        let nine = m
            .elements()
            .filter(|e| matches!(e, Element::Qp { m: 0, .. }) && m.elem_order(e) == 9)
            .count();
        assert_eq!(nine, 18);
    }

    #[test]
    fn conjugation_action() {
        // w^x = w^r in the exponent-3 group with x acting by r = 2
        let g = heis7();
        let w = g.gen_w();
        let x = g.q_gen("x").unwrap();
        assert_eq!(g.conjugate(&w, &x), g.pow(&w, 2));
        assert_eq!(g.conjugate(&w, &g.q_gen("y").unwrap()), w);
        assert_eq!(g.conjugate(&x, &g.identity()), x);
    }

    #[test]
    fn index_round_trip() {
        for d in [
            GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1]),
            GroupDescriptor::q_semidirect(QFamily::Z9xZ3, 13, &[3, 9]),
            GroupDescriptor::Z13OnE27,
        ] {
            let g = Group::build(d).unwrap();
            for i in 0..g.order() {
                assert_eq!(g.index_of(&g.element_at(i)), i);
            }
        }
    }

    #[test]
    fn family_mismatch() {
        let g = heis7();
        let z = Group::build(GroupDescriptor::Z13OnE27).unwrap();
        let a = z.gen_w();
        assert_eq!(g.try_mul(&g.identity(), &a), Err(AlgebraError::FamilyMismatch));
        // out-of-range coordinates are rejected too
        let bad = Element::Qp { q: [5, 0, 0], m: 0 };
        assert_eq!(g.try_mul(&bad, &bad), Err(AlgebraError::FamilyMismatch));
    }
}
