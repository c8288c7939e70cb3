// Chebyshev coefficient tables for the Airy evaluators.
// Generated by tools/gen_special_tables.py; do not edit by hand.

pub(super) const XC: f64 = 1.7;
pub(super) const XPOS_HI: f64 = 12.0;
pub(super) const XNEG_HI: f64 = 9.5;
pub(super) const W_POS_LO: f64 = 0.03608439182435161;
pub(super) const W_POS_HI: f64 = 0.67673381368885629;
pub(super) const W_NEG_LO: f64 = 0.05122781719918817;
pub(super) const W_NEG_HI: f64 = 0.81649658092772603;

pub(super) static AI_CENTER: [f64; 29] = [
    0.30209706545277170,
    -0.23190035525733096,
    -0.068179077311137858,
    0.066818333021275093,
    -0.013831529031402142,
    -0.0018537369785283548,
    0.0013995580444457923,
    -0.00021733812698752450,
    -1.8608533505028096e-5,
    1.2078132769493412e-5,
    -1.5498357739560978e-6,
    -9.6997506449096598e-8,
    5.6604829131717768e-8,
    -6.2910762341859380e-9,
    -3.0946566654264916e-10,
    1.6637633767738537e-10,
    -1.6471955949906095e-11,
    -6.6641596660676317e-13,
    3.3516606964195002e-13,
    -3.0118356785507210e-14,
    -1.0337641024836694e-15,
    4.9151492041601681e-16,
    -4.0630562629690946e-17,
    -1.2101279156591296e-18,
    5.4811856013379750e-19,
    -4.2103840259615780e-20,
    -1.1069589411815753e-21,
    4.8045891146546144e-22,
    -3.4904813157633632e-23,
];

pub(super) static AIP_CENTER: [f64; 29] = [
    -0.024781088854672137,
    -0.21582425228129286,
    0.22326176965222157,
    -0.055402893902144958,
    -0.012567641011102296,
    0.0096866544809239478,
    -0.0016633058432884441,
    -0.00019257877398752790,
    0.00012653755543234602,
    -1.7439635116675219e-5,
    -1.3485562446430465e-6,
    7.9372692986710809e-7,
    -9.3294396478266961e-8,
    -5.4000696394957076e-9,
    2.9220635739885637e-9,
    -3.0298807291089777e-10,
    -1.3989443847648770e-11,
    7.0722743814522620e-12,
    -6.6112451551350604e-13,
    -2.5360034494915102e-14,
    1.2109342044890441e-14,
    -1.0361732600052331e-15,
    -3.3967753622915135e-17,
    1.5441302174996645e-17,
    -1.2231159050630236e-18,
    -3.4986580855062342e-20,
    1.5232324368259226e-20,
    -1.1266268607718663e-21,
    -2.7739840316531984e-23,
];

pub(super) static AI_POS_SCALED: [f64; 31] = [
    0.97971855078110305,
    -0.016809339305537437,
    0.00091869326306860958,
    -8.2782270736568398e-5,
    9.7803701480608400e-6,
    -1.3802379738944273e-6,
    2.2150703280661929e-7,
    -3.9239799576792568e-8,
    7.5235440537357078e-9,
    -1.5398036332756409e-9,
    3.3299405009249924e-10,
    -7.5504242508922669e-11,
    1.7841708268535991e-11,
    -4.3724347728158033e-12,
    1.1069098598220388e-12,
    -2.8852136216401726e-13,
    7.7218853741268609e-14,
    -2.1170493527167300e-14,
    5.9337239153131881e-15,
    -1.6972882827350061e-15,
    4.9471478202563718e-16,
    -1.4673841071668010e-16,
    4.4239247865067693e-17,
    -1.3542173963921994e-17,
    4.2050918268015488e-18,
    -1.3234251524666182e-18,
    4.2181393813031741e-19,
    -1.3604624470558773e-19,
    4.4327283934296746e-20,
    -1.4449332129863139e-20,
    4.3205253514516880e-21,
];

pub(super) static AIP_POS_SCALED: [f64; 31] = [
    1.0292639188261152,
    0.024573244671693486,
    -0.0011289959324973278,
    9.5909779044197651e-5,
    -1.0993319856219137e-5,
    1.5227101669752206e-6,
    -2.4126862994335249e-7,
    4.2342573418177755e-8,
    -8.0603651987782110e-9,
    1.6402847758630224e-9,
    -3.5307498347207994e-10,
    7.9746972086026586e-11,
    -1.8782230624634418e-11,
    4.5898792118521079e-12,
    -1.1590870403041015e-12,
    3.0146454676867194e-13,
    -8.0527068753001747e-14,
    2.2039308478874291e-14,
    -6.1676126233162545e-15,
    1.7616978951070135e-15,
    -5.1282733516898715e-16,
    1.5193144025380883e-16,
    -4.5755177246568103e-17,
    1.3992188618534140e-17,
    -4.3407960881963043e-18,
    1.3649547293265052e-18,
    -4.3470042580832847e-19,
    1.4009701803022779e-19,
    -4.5615103596322545e-20,
    1.4859631591958515e-20,
    -4.4409553938723762e-21,
];

pub(super) static AI_NEG_P: [f64; 29] = [
    0.99316411284260231,
    -0.0080718681060424334,
    -0.0010972811936917135,
    0.00021439810355194791,
    -2.2769730111383050e-5,
    -1.4590297254536505e-7,
    8.8864501620486966e-7,
    -3.0099089327664793e-7,
    6.7516537430521853e-8,
    -9.6411707979441005e-9,
    -3.0744710209119928e-10,
    8.6045343391513693e-10,
    -3.9927294414017440e-10,
    1.3137361497435252e-10,
    -3.3731978677558680e-11,
    5.9948690431006802e-12,
    -1.3212455410322776e-14,
    -6.2071016650157967e-13,
    3.7202576373480957e-13,
    -1.5700506935791673e-13,
    5.4410592996938614e-14,
    -1.5663799975939882e-14,
    3.3917403053418857e-15,
    -2.3973695196221682e-16,
    -2.8072859686986048e-16,
    2.2142316903286814e-16,
    -1.1341313673480913e-16,
    4.7670070933676580e-17,
    -1.6137761515797233e-17,
];

pub(super) static AI_NEG_Q: [f64; 29] = [
    0.026544918882857286,
    0.021674352848750684,
    -0.0013548169940188708,
    -3.9717858033504203e-6,
    2.5335041230557782e-5,
    -6.3673991713722105e-6,
    9.9811972351243408e-7,
    -5.4617686510542455e-8,
    -3.2665463305428757e-8,
    1.6891425714877506e-8,
    -5.2761644006889779e-9,
    1.2220797334949709e-9,
    -1.7887965125205394e-10,
    -1.2891606308410943e-11,
    2.3146375386614550e-11,
    -1.1519149098421110e-11,
    4.2119001032051654e-12,
    -1.2472255965254993e-12,
    2.8575691522214783e-13,
    -3.3642723419955170e-14,
    -1.2361456799971232e-14,
    1.1884712085651608e-14,
    -6.1453868452789483e-15,
    2.5249769948230726e-15,
    -8.8342764835907101e-16,
    2.6131664788731266e-16,
    -5.9262258090247102e-17,
    5.6582532212534248e-18,
    2.7562676098191009e-18,
];

pub(super) static AIP_NEG_R: [f64; 29] = [
    1.0082872271851286,
    0.0098420874219603786,
    0.0014022835512816078,
    -0.00024485304090045794,
    2.4256124964977694e-5,
    3.9580308346416570e-7,
    -9.9328728914857122e-7,
    3.2391329867862251e-7,
    -7.0844020079115797e-8,
    9.7336465825983834e-9,
    4.6186022754755511e-10,
    -9.3371190930434570e-10,
    4.2215988270904585e-10,
    -1.3685861530816284e-10,
    3.4629940280317428e-11,
    -5.9890131135635080e-12,
    -7.2235672776763660e-14,
    6.6779925694860818e-13,
    -3.9041309126485186e-13,
    1.6287296979497334e-13,
    -5.5937747366944715e-14,
    1.5940940326316497e-14,
    -3.3879500816607779e-15,
    2.0427599591162049e-16,
    3.0318544832302407e-16,
    -2.3170939905339524e-16,
    1.1737774439164789e-16,
    -4.8998161393720892e-17,
    1.6506225271092014e-17,
];

pub(super) static AIP_NEG_S: [f64; 29] = [
    0.038080291737370343,
    0.031582604221335137,
    -0.0015746160102976948,
    -1.4665500372913309e-5,
    2.9095035066711985e-5,
    -6.9499248170783405e-6,
    1.0474413954586330e-6,
    -4.9011075240264758e-8,
    -3.6720481402775850e-8,
    1.8137066234501022e-8,
    -5.5504749705070892e-9,
    1.2615430045552282e-9,
    -1.7774004557635989e-10,
    -1.6451651963772195e-11,
    2.4849395036889736e-11,
    -1.2101932490316598e-11,
    4.3713194486215846e-12,
    -1.2800660376000227e-12,
    2.8854437961297846e-13,
    -3.1842573580423549e-14,
    -1.3744975902270350e-14,
    1.2530598212134770e-14,
    -6.3886028889212812e-15,
    2.6025971462138327e-15,
    -9.0380072053410902e-16,
    2.6493802500832852e-16,
    -5.9059895319957766e-17,
    5.0673996489478949e-18,
    3.0739633002738750e-18,
];
