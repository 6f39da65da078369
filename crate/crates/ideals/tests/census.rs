use std::collections::BTreeSet;

use thom_ideals::{canonical_representatives, enumerate_ideals};

/// Nonzero exponents whose divisor box has at most `m` nonzero cells.
fn candidates(n: usize, m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            let boxsize: usize = cur.iter().map(|&a| a as usize + 1).product();
            if boxsize > 1 && boxsize - 1 <= m {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=m as u32 {
            cur[i] = a;
            let partial: usize = cur[..=i].iter().map(|&a| a as usize + 1).product();
            if partial - 1 > m {
                break;
            }
            rec(i + 1, m, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, m, &mut cur, &mut out);
    out
}

fn closed(set: &BTreeSet<Vec<u32>>) -> bool {
    set.iter().all(|v| {
        (0..v.len()).all(|j| {
            if v[j] == 0 {
                return true;
            }
            let mut d = v.clone();
            d[j] -= 1;
            d.iter().all(|&x| x == 0) || set.contains(&d)
        })
    })
}

fn brute(n: usize, m: usize) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let cands = candidates(n, m);
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..m).collect();
    if m > cands.len() {
        return out;
    }
    loop {
        let set: BTreeSet<Vec<u32>> = idx.iter().map(|&i| cands[i].clone()).collect();
        if closed(&set) {
            out.insert(set);
        }
        let mut k = m;
        while k > 0 && idx[k - 1] == cands.len() - m + k - 1 {
            k -= 1;
        }
        if k == 0 {
            return out;
        }
        idx[k - 1] += 1;
        for j in k..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=3 {
        for m in 1..=5 {
            let ours: BTreeSet<BTreeSet<Vec<u32>>> =
                enumerate_ideals(n, m).into_iter().map(|i| i.complement().clone()).collect();
            assert_eq!(ours, brute(n, m), "n={n} m={m}");
        }
    }
}

#[test]
fn orbit_stabilizer() {
    for m in 1..=4 {
        let all = enumerate_ideals(m, m);
        let mut total = 0;
        for r in canonical_representatives(m) {
            let e = r.ideal.embed(m);
            let orbit = e.orbit();
            let fact: u64 = (1..=m as u64).product();
            assert_eq!(fact / r.ideal.stabilizer_order_in(m), orbit.len() as u64);
            assert!(orbit.iter().all(|o| all.contains(o)));
            total += orbit.len();
        }
        assert_eq!(total, all.len());
    }
}

#[test]
fn representative_shapes() {
    let names: Vec<String> = canonical_representatives(3).iter().map(|r| r.ideal.to_string()).collect();
    assert_eq!(names, ["(x^4)", "(x^2,y^2)", "(x^2,xy,y^3)", "(x^2,xy,xz,y^2,yz,z^2)"]);
    let four = canonical_representatives(4);
    assert_eq!(four.len(), 7);
    assert_eq!(four[6].ideal, thom_ideals::MonomialIdeal::max_square(4));
    assert_eq!(canonical_representatives(5).len(), thom_ideals::computed_representatives(5).len());
}
