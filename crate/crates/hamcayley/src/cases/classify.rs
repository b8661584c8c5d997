//! Route selection: which part of the catalog (or which fallback) covers a
//! given group and generating set.

use crate::algebra::{Element, Group, Subgroup};
use crate::lift::{lemma_hypotheses, LemmaMatch};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Sylow p-subgroups not normal: the order-351 machinery.
    Z13Route,
    /// Derived subgroup cyclic of prime-power order.
    KeatingWitteRoute,
    /// All generator quotients inside one normal prime-power subgroup.
    PkSubgrpRoute,
    /// Nonabelian Sylow 3-subgroup of exponent 3.
    Exp3Route,
    /// Exponent 9, no order-9 element centralizing `P`.
    Exp9No9Route,
    /// Exponent 9 with an order-9 element centralizing `P`.
    Exp9CentRoute,
    SearchFallback,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Z13Route => "z13",
            Route::KeatingWitteRoute => "keating-witte",
            Route::PkSubgrpRoute => "pk-subgrp",
            Route::Exp3Route => "exp3",
            Route::Exp9No9Route => "exp9-no9",
            Route::Exp9CentRoute => "exp9-cent",
            Route::SearchFallback => "search-fallback",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RouteDecision {
    pub route: Route,
    /// Cited-result hypotheses that matched, with witnesses.
    pub matched: Vec<LemmaMatch>,
}

/// Total decision procedure: every `(G, S)` receives a route, in fixed
/// precedence order.
pub fn classify(g: &Group, s: &[Element]) -> RouteDecision {
    let matched = lemma_hypotheses(g, s);
    let route = decide(g, &matched);
    RouteDecision { route, matched }
}

fn decide(g: &Group, matched: &[LemmaMatch]) -> Route {
    if g.sylow_count(g.p()) > 1 {
        return Route::Z13Route;
    }
    if matched.iter().any(|m| matches!(m, LemmaMatch::KeatingWitte { .. })) {
        return Route::KeatingWitteRoute;
    }
    if matched.iter().any(|m| matches!(m, LemmaMatch::PkSubgrp { .. })) {
        return Route::PkSubgrpRoute;
    }
    let q = Subgroup::sylow3(g);
    let exponent = q.elements().iter().map(|e| g.elem_order(e)).max().unwrap_or(1);
    match exponent {
        3 => Route::Exp3Route,
        9 => {
            // does an order-9 element of Q centralize P?
            let has9 = q
                .elements()
                .iter()
                .any(|e| g.elem_order(e) == 9 && g.action_of(e) == 1);
            if has9 {
                Route::Exp9CentRoute
            } else {
                Route::Exp9No9Route
            }
        }
        _ => Route::SearchFallback,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GroupDescriptor, QFamily};

    fn some_genset(g: &Group) -> Vec<Element> {
        crate::algebra::enumerate_gensets(g)
            .into_iter()
            .next()
            .map(|p| p.to_vec())
            .unwrap_or_else(|| vec![g.gen_w()])
    }

    #[test]
    fn z13_group_routes_to_z13() {
        let g = Group::build(GroupDescriptor::Z13OnE27).unwrap();
        let w = g.gen_w();
        let v = g.gen_v().unwrap();
        let d = classify(&g, &[w, g.mul(&w, &v)]);
        assert_eq!(d.route, Route::Z13Route);
    }

    #[test]
    fn cyclic_q_routes_to_keating_witte() {
        let g = Group::build(GroupDescriptor::q_semidirect(QFamily::Z27, 7, &[2])).unwrap();
        let s = some_genset(&g);
        assert_eq!(classify(&g, &s).route, Route::KeatingWitteRoute);
    }

    #[test]
    fn abelian_direct_product_routes_to_keating_witte() {
        let g = Group::build(GroupDescriptor::direct_product(QFamily::E27, 7)).unwrap();
        assert_eq!(classify(&g, &[g.gen_w()]).route, Route::KeatingWitteRoute);
    }

    #[test]
    fn mod27_routes_by_centralizer() {
        let cent =
            Group::build(GroupDescriptor::q_semidirect(QFamily::Mod27, 7, &[1, 2])).unwrap();
        let s = some_genset(&cent);
        assert_eq!(classify(&cent, &s).route, Route::Exp9CentRoute);

        let no9 =
            Group::build(GroupDescriptor::q_semidirect(QFamily::Mod27, 7, &[2, 1])).unwrap();
        let s = some_genset(&no9);
        assert_eq!(classify(&no9, &s).route, Route::Exp9No9Route);
    }

    #[test]
    fn heis27_routes_to_exp3() {
        let g =
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap();
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        assert_eq!(classify(&g, &[x, yw]).route, Route::Exp3Route);
    }
}
