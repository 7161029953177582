//! Query scripts used by the named checks. Those reproducing a published
//! command keep its text exactly, including unparenthesized quantifier
//! bodies; the others state a claim that has no printed command.

pub const EVEN_MOT: &str = r#"def tm_blocks "?lsd_2 n>=1 & (At t<n => T_lsd[i+t]=T_lsd[i]) &
    T_lsd[i+n]!=T_lsd[i] & (i=0|T_lsd[i-1]!=T_lsd[i])":
def tm_block_start "?lsd_2 i>=1 & ($tm_blocks(i,1)|$tm_blocks(i,2))":
eval even_mot "?lsd_2 An (MOT2[n]=@0 <=> Ei $tm_block_start(i) &
    (n+2=4*i | n+1=4*i))":
"#;

pub const MOT3_SLICES: &str = r#"eval mot3one "?lsd_3 MOT3[n]=@1":
eval mot3two "?lsd_3 MOT3[n]=@2":
"#;

pub const MOT5_MOD0: &str = r#"eval mot5mod0 "?lsd_5 MOT5[n]=@0":
"#;

pub const MOT5_CRITICAL: &str = r#"eval tmp "?lsd_5 Ei,n (n>=1) & At (t<=2*n) => MOT5[i+t]=MOT5[i+t+n]":
eval tmp "?lsd_5 Ei (n>=1) & At (t<2*n) => MOT5[i+t]=MOT5[i+t+n]":
"#;

pub const MOT5_RECURRENCE: &str = r#"def mot5faceq "?lsd_5 At (t<n) => (MOT5[i+t]=MOT5[j+t])":
eval tmp "?lsd_5 An (n>=1) => Ai Ej (j>i) & (j<i+200*n+1) &
    $mot5faceq(i,j,n)":
eval tmp "?lsd_5 An (n>=1) => Ai Ej (j>i) & (j<i+200*n) &
    $mot5faceq(i,j,n)":
"#;

pub const TRI3_SLICES: &str = r#"eval tri3one "?lsd_3 TRI3[n]=@1":
eval tri3zero "?lsd_3 TRI3[n]=@0":
"#;

pub const TRI5_NO_ZERO: &str = r#"eval tri5zero "?lsd_5 En TRI5[n]=@0":
"#;

pub const TRI5_CRITICAL: &str = r#"eval tmp "?lsd_5 Ei,n (n>=1) & At (t<=2*n) => TRI5[i+t]=TRI5[i+t+n]":
eval tmp "?lsd_5 Ei (n>=1) & At (t<2*n) => TRI5[i+t]=TRI5[i+t+n]":
"#;

/// `j <= i+200n-192` is written `j < i+200n-191`.
pub const TRI5_RECURRENCE: &str = r#"def tri5faceq "?lsd_5 At (t<n) => (TRI5[i+t]=TRI5[j+t])":
eval tmp "?lsd_5 An (n>=1) => Ai Ej (j>i) & (j<i+200*n-191) &
    $tri5faceq(i,j,n)":
eval tmp "?lsd_5 An (n>=1) => Ai Ej (j>i) & (j<i+200*n-192) &
    $tri5faceq(i,j,n)":
"#;

pub const TRI5_PREFIX: &str = r#"def pr_tri5 "?lsd_5 Aj Ei i+n<=s & At t<n => TRI5[i+t]=TRI5[j+t]":
eval tmp "?lsd_5 An $pr_tri5(n,121*n)":
eval tmp "?lsd_5 An $pr_tri5(n,121*n-1)":
"#;

/// At `n = 0` the bound `121n-1` is undefined, which alone falsifies the
/// last command above; this variant asks whether it holds for `n >= 1`.
pub const TRI5_PREFIX_POSITIVE: &str = r#"eval tmp "?lsd_5 An (n>=1) => $pr_tri5(n,121*n-1)":
"#;

pub const CAT3_MAX0: &str = r#"eval cat3max0 "?lsd_3 n>=1 & (At t<n => CAT3[i+t]=@0) &
    CAT3[i+n]!=@0 & (i=0|CAT3[i-1]!=@0)":
"#;

pub const CAT3_BLOCKS: &str = r#"eval cat3max12 "?lsd_3 n>=1 & (At t<n => CAT3[i+t]!=@0) &
    CAT3[i+n]=@0 & (i=0|CAT3[i-1]=@0)":
eval cat3_111222 "?lsd_3 $cat3max12(i,6) & CAT3[i]=@1 &
    CAT3[i+1]=@1 & CAT3[i+2]=@1 & CAT3[i+3]=@2 &
    CAT3[i+4]=@2 & CAT3[i+5]=@2":
eval cat3_222111 "?lsd_3 $cat3max12(i,6) & CAT3[i]=@2 &
    CAT3[i+1]=@2 & CAT3[i+2]=@2 & CAT3[i+3]=@1 &
    CAT3[i+4]=@1 & CAT3[i+5]=@1":
eval cat3all12 "?lsd_3 Ai,n $cat3max12(i,n) =>
    (i=0 | $cat3_111222(i) | $cat3_222111(i))":
"#;

pub const CAT3_BLOCK_FACTS: &str = r#"eval cat3len6 "?lsd_3 Ai,n ($cat3max12(i,n) & i>0) => n=6":
eval cat3first "?lsd_3 $cat3max12(0,5) & CAT3[0]=@1 & CAT3[1]=@1 &
    CAT3[2]=@2 & CAT3[3]=@2 & CAT3[4]=@2":
"#;

pub const CAT5_MAX0: &str = r#"eval cat5max0 "?lsd_5 n>=1 & (At t<n => CAT5[i+t]=@0) &
    CAT5[i+n]!=@0 & (i=0|CAT5[i-1]!=@0)":
"#;

pub const CAT5_BLOCKS: &str = r#"eval cat5max1234 "?lsd_5 n>=1 & (At t<n => CAT5[i+t]!=@0) &
    CAT5[i+n]=@0 & (i=0|CAT5[i-1]=@0)":
"#;

pub const CAT5_BLOCK_FACTS: &str = r#"eval cat5first "?lsd_5 $cat5max1234(0,3) & CAT5[0]=@1 & CAT5[1]=@1 & CAT5[2]=@2":
eval cat5len4 "?lsd_5 Ai,n ($cat5max1234(i,n) & i>0) => n=4":
eval cat5values "?lsd_5 Ai ($cat5max1234(i,4) & i>0) =>
    ((CAT5[i]=@1 & CAT5[i+1]=@3 & CAT5[i+2]=@3 & CAT5[i+3]=@1) |
     (CAT5[i]=@2 & CAT5[i+1]=@1 & CAT5[i+2]=@1 & CAT5[i+3]=@2) |
     (CAT5[i]=@3 & CAT5[i+1]=@4 & CAT5[i+2]=@4 & CAT5[i+3]=@3) |
     (CAT5[i]=@4 & CAT5[i+1]=@2 & CAT5[i+2]=@2 & CAT5[i+3]=@4))":
eval cat5has1331 "?lsd_5 Ei i>0 & $cat5max1234(i,4) & CAT5[i]=@1 & CAT5[i+1]=@3 & CAT5[i+2]=@3 & CAT5[i+3]=@1":
eval cat5has2112 "?lsd_5 Ei i>0 & $cat5max1234(i,4) & CAT5[i]=@2 & CAT5[i+1]=@1 & CAT5[i+2]=@1 & CAT5[i+3]=@2":
eval cat5has3443 "?lsd_5 Ei i>0 & $cat5max1234(i,4) & CAT5[i]=@3 & CAT5[i+1]=@4 & CAT5[i+2]=@4 & CAT5[i+3]=@3":
eval cat5has4224 "?lsd_5 Ei i>0 & $cat5max1234(i,4) & CAT5[i]=@4 & CAT5[i+1]=@2 & CAT5[i+2]=@2 & CAT5[i+3]=@4":
"#;
