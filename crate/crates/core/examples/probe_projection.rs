// Scratch probe: projection variants vs paper spectrum values.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{legendre, LglOperators, ProjectionKind};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

/// Exact L2 projection of f onto P0..P1 per element, evaluated at working nodes.
fn exact_l2_projected(mesh: Mesh1D, ops: &LglOperators, f: impl Fn(f64) -> f64) -> BurgersField {
    let quad = LglOperators::new(24).unwrap();
    let np = ops.n_nodes();
    let mut field = BurgersField::zeros(mesh, ops.degree());
    for e in 0..mesh.num_elements() {
        let mut coeff = [0.0; 2];
        for k in 0..2 {
            let mut num = 0.0;
            let mut den = 0.0;
            for (q, &xq) in quad.nodes().iter().enumerate() {
                let pk = legendre(k, xq);
                num += quad.weights()[q] * f(mesh.physical_coord(e, xq)) * pk;
                den += quad.weights()[q] * pk * pk;
            }
            coeff[k] = num / den;
        }
        for i in 0..np {
            let x = ops.nodes()[i];
            field.data[e * np + i] = coeff[0] + coeff[1] * x;
        }
    }
    field
}

fn spectrum_of(baseflow: &BurgersField, k: usize, degree: usize, alpha: f64, surface: BurgersFlux) -> f64 {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(degree).unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, surface).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, &baseflow.data, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn main() {
    let pi = std::f64::consts::PI;
    let mesh = Mesh1D::periodic_unit(10).unwrap();
    let ops = LglOperators::new(3).unwrap();
    let f = |x: f64| (pi * x - 0.7).sin() + 2.0;

    let discrete = BurgersField::from_function(mesh, &ops, f)
        .project_to_degree(&ops, 1, ProjectionKind::L2).unwrap();
    let exact = exact_l2_projected(mesh, &ops, f);

    // Interface jumps of both.
    let np = 4;
    let jump = |fld: &BurgersField, e: usize| {
        (fld.data[mesh.right_neighbor(e) * np] - fld.data[e * np + np - 1]).abs()
    };
    println!("jumps (discrete, exact):");
    for e in 0..10 {
        println!("  e={e}: {:.6e}  {:.6e}", jump(&discrete, e), jump(&exact, e));
    }

    let ec = BurgersFlux::EntropyConserving;
    println!("fig4-left  discrete-L2: {:.5}   (paper 0.1006)", spectrum_of(&discrete, 10, 3, 1.0, ec));
    println!("fig4-left  exact-L2:    {:.5}   (paper 0.1006)", spectrum_of(&exact, 10, 3, 1.0, ec));
    println!("fig2-right discrete-L2: {:.5}   (paper 1.0307)", spectrum_of(&discrete, 10, 3, 2.0/3.0, ec));
    println!("fig2-right exact-L2:    {:.5}   (paper 1.0307)", spectrum_of(&exact, 10, 3, 2.0/3.0, ec));

    // fig8-right variants: N=15, K=3, 4pi baseflow.
    let mesh3 = Mesh1D::periodic_unit(3).unwrap();
    let ops15 = LglOperators::new(15).unwrap();
    let f4 = |x: f64| (4.0 * pi * x - 0.7).sin() + 2.0;
    let nodal = BurgersField::from_function(mesh3, &ops15, f4);
    let proj_l2 = nodal.project_to_degree(&ops15, 1, ProjectionKind::L2).unwrap();
    let proj_int = nodal.project_to_degree(&ops15, 1, ProjectionKind::Interpolation).unwrap();
    let ed = BurgersFlux::EdRusanov;
    println!("fig8-right nodal (unprojected): {:.5} (paper 1.359)", spectrum_of(&nodal, 3, 15, 2.0/3.0, ed));
    println!("fig8-right L2 to N~=1:          {:.5} (paper 1.359)", spectrum_of(&proj_l2, 3, 15, 2.0/3.0, ed));
    println!("fig8-right interp to N~=1:      {:.5} (paper 1.359)", spectrum_of(&proj_int, 3, 15, 2.0/3.0, ed));
}
