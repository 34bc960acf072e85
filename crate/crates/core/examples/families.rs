//! Generate members of each family, move them to random coordinates and
//! recognize them again. A perturbed member is shown as a control.

use syzlab::arrangements::{perturb_off_pencil, recognize, sample_instance, trial_rng, FamilyTag};
use syzlab::jacobian::Jacobian;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (i, tag) in FamilyTag::FAMILIES.iter().enumerate() {
        let mut rng = trial_rng(2024, i as u64);
        let inst = sample_instance(*tag, 5, 8, true, &mut rng)?;
        let mut j = Jacobian::new(inst.curve.product())?;
        let control = perturb_off_pencil(*tag, &inst.normal_form);
        println!(
            "{:<4} d={:<3}  tau={:>2}  {:<16} recognized as {}, control {}",
            tag.name(),
            inst.degree(),
            j.tjurina()?,
            j.freeness().to_string(),
            recognize(&inst.curve)?,
            recognize(&control)?,
        );
    }
    Ok(())
}
