//! Formulas checked against the brute-force evaluator.
//!
//! Published sentences are included with their outer quantifier prefix
//! removed, so that each assignment of the freed variables is compared
//! individually; every remaining quantifier is guarded by a bound that the
//! entry's domain covers.

use std::collections::HashSet;

use ctseq::harness::scripts::{CAT3_BLOCKS, CAT5_BLOCKS};
use ctseq::harness::builtin_registry;
use ctseq::logic::Session;

use super::{differential, Diff, Entry};

const TM_DEFS: &str = r#"def tm_blocks "?lsd_2 n>=1 & (At t<n => T_lsd[i+t]=T_lsd[i]) &
    T_lsd[i+n]!=T_lsd[i] & (i=0|T_lsd[i-1]!=T_lsd[i])":
def tm_block_start "?lsd_2 i>=1 & ($tm_blocks(i,1)|$tm_blocks(i,2))":
"#;
const MOT5_FACEQ: &str = r#"def mot5faceq "?lsd_5 At (t<n) => (MOT5[i+t]=MOT5[j+t])":"#;
const TRI5_FACEQ: &str = r#"def tri5faceq "?lsd_5 At (t<n) => (TRI5[i+t]=TRI5[j+t])":"#;
const PR_TRI5: &str = r#"def pr_tri5 "?lsd_5 Aj Ei i+n<=s & At t<n => TRI5[i+t]=TRI5[j+t]":"#;
const HELPERS: &str = r#"def dbl "?lsd_2 y=2*x":
"#;
const BETWEEN: &str = r#"def between "?lsd_3 a<b & b<c":
"#;

/// Domain for the `pr_tri5` entries. Every factor of length below 8 first
/// occurs before position 600, and for longer factors the one at position
/// 599 is new, so `Aj` over `j < 700` decides every assignment checked.
const PR_DOMAIN: u64 = 700;

const fn e(name: &'static str, setup: &'static str, formula: &'static str, bound: u64, domain: u64) -> Entry {
    Entry {
        name,
        setup,
        formula,
        bound,
        domain,
    }
}

pub static PUBLISHED: &[Entry] = &[
    e("tm_blocks", "", "?lsd_2 n>=1 & (At t<n => T_lsd[i+t]=T_lsd[i]) & T_lsd[i+n]!=T_lsd[i] & (i=0|T_lsd[i-1]!=T_lsd[i])", 200, 200),
    e("tm_block_start", TM_DEFS, "?lsd_2 i>=1 & ($tm_blocks(i,1)|$tm_blocks(i,2))", 200, 200),
    e("even_mot", TM_DEFS, "?lsd_2 (MOT2[n]=@0 <=> Ei $tm_block_start(i) & (n+2=4*i | n+1=4*i))", 200, 200),
    e("mot3one", "", "?lsd_3 MOT3[n]=@1", 200, 1),
    e("mot3two", "", "?lsd_3 MOT3[n]=@2", 200, 1),
    e("mot5mod0", "", "?lsd_5 MOT5[n]=@0", 200, 1),
    e("mot5_cube_exponent", "", "?lsd_5 (n>=1) & At (t<=2*n) => MOT5[i+t]=MOT5[i+t+n]", 200, 401),
    e("mot5_cube_orders", "", "?lsd_5 (n>=1) & At (t<2*n) => MOT5[i+t]=MOT5[i+t+n]", 200, 400),
    e("mot5faceq", "", "?lsd_5 At (t<n) => (MOT5[i+t]=MOT5[j+t])", 200, 200),
    e("mot5_recur_200n", MOT5_FACEQ, "?lsd_5 (n>=1) => Ej (j>i) & (j<i+200*n+1) & $mot5faceq(i,j,n)", 200, 40_201),
    e("mot5_recur_200n_minus_1", MOT5_FACEQ, "?lsd_5 (n>=1) => Ej (j>i) & (j<i+200*n) & $mot5faceq(i,j,n)", 200, 40_200),
    e("tri3one", "", "?lsd_3 TRI3[n]=@1", 200, 1),
    e("tri3zero", "", "?lsd_3 TRI3[n]=@0", 200, 1),
    e("tri5zero", "", "?lsd_5 TRI5[n]=@0", 200, 1),
    e("tri5_cube_exponent", "", "?lsd_5 (n>=1) & At (t<=2*n) => TRI5[i+t]=TRI5[i+t+n]", 200, 401),
    e("tri5_cube_orders", "", "?lsd_5 (n>=1) & At (t<2*n) => TRI5[i+t]=TRI5[i+t+n]", 200, 400),
    e("tri5faceq", "", "?lsd_5 At (t<n) => (TRI5[i+t]=TRI5[j+t])", 200, 200),
    e("tri5_recur_192", TRI5_FACEQ, "?lsd_5 (n>=1) => Ej (j>i) & (j<i+200*n-191) & $tri5faceq(i,j,n)", 200, 40_010),
    e("tri5_recur_193", TRI5_FACEQ, "?lsd_5 (n>=1) => Ej (j>i) & (j<i+200*n-192) & $tri5faceq(i,j,n)", 200, 40_010),
    e("pr_tri5", "", "?lsd_5 Aj Ei i+n<=s & At t<n => TRI5[i+t]=TRI5[j+t]", 200, PR_DOMAIN),
    e("pr_tri5_121n", PR_TRI5, "?lsd_5 $pr_tri5(n,121*n)", 8, PR_DOMAIN),
    e("pr_tri5_121n_minus_1", PR_TRI5, "?lsd_5 $pr_tri5(n,121*n-1)", 8, PR_DOMAIN),
    e("pr_tri5_positive", PR_TRI5, "?lsd_5 (n>=1) => $pr_tri5(n,121*n-1)", 8, PR_DOMAIN),
    e("cat3max0", "", "?lsd_3 n>=1 & (At t<n => CAT3[i+t]=@0) & CAT3[i+n]!=@0 & (i=0|CAT3[i-1]!=@0)", 200, 200),
    e("cat3max12", "", "?lsd_3 n>=1 & (At t<n => CAT3[i+t]!=@0) & CAT3[i+n]=@0 & (i=0|CAT3[i-1]=@0)", 200, 200),
    e("cat3_111222", CAT3_BLOCKS, "?lsd_3 $cat3max12(i,6) & CAT3[i]=@1 & CAT3[i+1]=@1 & CAT3[i+2]=@1 & CAT3[i+3]=@2 & CAT3[i+4]=@2 & CAT3[i+5]=@2", 200, 1),
    e("cat3_222111", CAT3_BLOCKS, "?lsd_3 $cat3max12(i,6) & CAT3[i]=@2 & CAT3[i+1]=@2 & CAT3[i+2]=@2 & CAT3[i+3]=@1 & CAT3[i+4]=@1 & CAT3[i+5]=@1", 200, 1),
    e("cat3all12", CAT3_BLOCKS, "?lsd_3 $cat3max12(i,n) => (i=0 | $cat3_111222(i) | $cat3_222111(i))", 200, 200),
    e("cat3len6", CAT3_BLOCKS, "?lsd_3 ($cat3max12(i,n) & i>0) => n=6", 200, 200),
    e("cat3first", CAT3_BLOCKS, "?lsd_3 $cat3max12(0,5) & CAT3[0]=@1 & CAT3[1]=@1 & CAT3[2]=@2 & CAT3[3]=@2 & CAT3[4]=@2", 200, 200),
    e("cat5max0", "", "?lsd_5 n>=1 & (At t<n => CAT5[i+t]=@0) & CAT5[i+n]!=@0 & (i=0|CAT5[i-1]!=@0)", 200, 200),
    e("cat5max1234", "", "?lsd_5 n>=1 & (At t<n => CAT5[i+t]!=@0) & CAT5[i+n]=@0 & (i=0|CAT5[i-1]=@0)", 200, 200),
    e("cat5first", CAT5_BLOCKS, "?lsd_5 $cat5max1234(0,3) & CAT5[0]=@1 & CAT5[1]=@1 & CAT5[2]=@2", 200, 200),
    e("cat5len4", CAT5_BLOCKS, "?lsd_5 ($cat5max1234(i,n) & i>0) => n=4", 200, 200),
    e("cat5values", CAT5_BLOCKS, "?lsd_5 ($cat5max1234(i,4) & i>0) => ((CAT5[i]=@1 & CAT5[i+1]=@3 & CAT5[i+2]=@3 & CAT5[i+3]=@1) | (CAT5[i]=@2 & CAT5[i+1]=@1 & CAT5[i+2]=@1 & CAT5[i+3]=@2) | (CAT5[i]=@3 & CAT5[i+1]=@4 & CAT5[i+2]=@4 & CAT5[i+3]=@3) | (CAT5[i]=@4 & CAT5[i+1]=@2 & CAT5[i+2]=@2 & CAT5[i+3]=@4))", 200, 200),
    e("cat5has1331", CAT5_BLOCKS, "?lsd_5 i>0 & $cat5max1234(i,4) & CAT5[i]=@1 & CAT5[i+1]=@3 & CAT5[i+2]=@3 & CAT5[i+3]=@1", 200, 200),
    e("cat5has4224", CAT5_BLOCKS, "?lsd_5 i>0 & $cat5max1234(i,4) & CAT5[i]=@4 & CAT5[i+1]=@2 & CAT5[i+2]=@2 & CAT5[i+3]=@4", 200, 200),
];

pub static SYNTHETIC: &[Entry] = &[
    e("sum", "", "?lsd_2 x+y=z", 200, 1),
    e("scaled_lt", "", "?lsd_3 2*x<y+3", 200, 1),
    e("monus_eq", "", "?lsd_2 x-y=3", 200, 1),
    e("monus_le", "", "?lsd_2 x-y<=2", 200, 1),
    e("nested_monus", "", "?lsd_5 (x-y)-z=1", 200, 1),
    e("residue", "", "?lsd_2 Ek n=3*k+1", 200, 200),
    e("even_base3", "", "?lsd_3 Ek k+k=n", 200, 200),
    e("guarded_forall", "", "?lsd_2 Ax (x<n => x+1<=n)", 200, 200),
    e("half", "", "?lsd_2 Ex x<n & x+x=n", 200, 200),
    e("base7_combination", "", "?lsd_7 3*x+5*y=n", 200, 1),
    e("ne_or_lt", "", "?lsd_2 ~(x=y) | x<y", 200, 1),
    e("lt_iff_not_ge", "", "?lsd_2 (x<y) <=> ~(y<=x)", 200, 1),
    e("ne_shift", "", "?lsd_3 x!=y => x+1!=y+1", 200, 1),
    e("gt_ge", "", "?lsd_5 x>y+1 | x>=3*y", 200, 1),
    e("mot2_repeat", "", "?lsd_2 MOT2[n]=MOT2[n+1]", 200, 1),
    e("mot3_mixed", "", "?lsd_3 MOT3[2*n]=@0 | MOT3[n+1]=@2", 200, 1),
    e("mot5_vs_tri5", "", "?lsd_5 MOT5[i]=TRI5[j]", 200, 1),
    e("cat5_ne_tri5", "", "?lsd_5 CAT5[n]!=TRI5[n]", 200, 1),
    e("cat3_monus_index", "", "?lsd_3 CAT3[n-2]=@1", 200, 1),
    e("cat3_monus_index_ne", "", "?lsd_3 CAT3[n-2]!=@1", 200, 1),
    e("mot5_zero_before", "", "?lsd_5 Ei i<n & MOT5[i]=@0", 200, 200),
    e("tri5_no_zero_below", "", "?lsd_5 At t<n => TRI5[t]!=@0", 200, 200),
    e("tm_double", "", "?lsd_2 T_lsd[n]=T_lsd[2*n]", 200, 1),
    e("tm_alternating", "", "?lsd_2 T_lsd[n]!=T_lsd[n+1] & T_lsd[n+1]!=T_lsd[n+2]", 200, 1),
    e("call_repeated_var", HELPERS, "?lsd_2 $dbl(x,x)", 200, 1),
    e("call_term_args", HELPERS, "?lsd_2 $dbl(n+1,m)", 200, 1),
    e("call_under_exists", HELPERS, "?lsd_2 Ez $dbl(z,n)", 200, 200),
    e("call_scaled_arg", BETWEEN, "?lsd_3 $between(x,2*x,y)", 200, 1),
    e("call_monus_arg", BETWEEN, "?lsd_3 $between(x-1,x,x+1)", 200, 1),
    e("two_zeros_before", "", "?lsd_5 Ei,j (i<j & j<n & MOT5[i]=@0 & MOT5[j]=@0)", 200, 200),
    e("mot2_binary", "", "?lsd_2 Ax (x<m => (MOT2[x]=@0 | MOT2[x]=@1))", 200, 200),
    e("sibling_scope", "", "?lsd_3 x=1 & Ex x=2", 200, 200),
    e("exists_then_free", "", "?lsd_2 (Ex x<y) & x=y", 200, 200),
    e("mot5_factor_pair", "", "?lsd_5 MOT5[i+t]=MOT5[j+t]", 200, 1),
    e("cat3_period", "", "?lsd_3 Ai (i<n => CAT3[i]=CAT3[i+n])", 200, 200),
    e("le_as_exists", "", "?lsd_2 x<=y <=> Ez x+z=y", 200, 200),
    e("pair_exists", "", "?lsd_2 Ex,y (x+y=n & x=y+1)", 200, 200),
    e("implication_chain", "", "?lsd_3 x<y => y<z => x<z", 200, 1),
];

/// Runs entries in one session, executing each distinct setup once.
pub struct Differ {
    session: Session,
    done: HashSet<&'static str>,
}

impl Differ {
    pub fn new() -> Self {
        Differ {
            session: builtin_registry(),
            done: HashSet::new(),
        }
    }

    pub fn run(&mut self, entry: &Entry) -> Diff {
        let fresh = self.done.insert(entry.setup);
        let setup = if fresh { entry.setup } else { "" };
        differential(&Entry { setup, ..*entry }, &mut self.session, entry.setup)
    }
}
