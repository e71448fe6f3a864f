use pbck::lgroup::{box_algebra, BoxSpec};
use pbck::{measures, polytope, profile, states};
use num_traits::{One, Zero};
use pbck::rat::Rat;
use std::time::Instant;

fn main() {
    let alg = box_algebra(&BoxSpec::neg(vec![7, 7])).unwrap();
    let t = Instant::now(); let _p = profile::structural_profile(&alg);
    println!("profile: {:?}", t.elapsed());
    let t = Instant::now(); let bs = states::bosbach_states(&alg).unwrap();
    println!("bosbach: {:?}", t.elapsed());
    let t = Instant::now();
    for v in &bs.vertices { let _ = states::check_state(&alg, &v.values).unwrap(); }
    println!("check_state x{}: {:?}", bs.vertices.len(), t.elapsed());
    let t = Instant::now(); let ctx = measures::unital_context(&alg, alg.zero().unwrap()).unwrap();
    println!("unital_context: {:?}", t.elapsed());
    let t = Instant::now();
    for v in &ctx.space.vertices.clone() { let _ = measures::unital_clauses(&alg, &ctx, &v.values).unwrap(); }
    println!("unital_clauses x{}: {:?}", ctx.space.vertices.len(), t.elapsed());
    // vanishing system alone
    let t = Instant::now();
    let mut vanish = measures::measure_system(&alg, measures::Normalization::Free).unwrap();
    let mut urow = vec![Rat::zero(); alg.n()];
    urow[alg.zero().unwrap().index()] = Rat::one();
    vanish.push_eq(urow, Rat::zero());
    vanish.push_eq(vec![Rat::one(); alg.n()], Rat::one());
    let f = polytope::feasible(&vanish);
    println!("vanishing LP: {:?} feasible={}", t.elapsed(), f.is_feasible());
    let t = Instant::now(); let _q = states::mv_quotient_check(&alg, &bs.vertices[0].values).unwrap();
    println!("mv_quotient: {:?}", t.elapsed());
}
