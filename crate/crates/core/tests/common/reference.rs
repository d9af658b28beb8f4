#![allow(clippy::excessive_precision, clippy::approx_constant)]

pub const BESSEL_TABLE: &[(f64, f64, f64, f64, f64, f64)] = &[
    // (nu, x, J, Y, J', Y')
    (0.0, 0.5, 0.93846980724081290423, -0.44451873350670655715, -0.24226845767487388638, 1.4714723926702430692),
    (0.0, 2.5, -0.048383776468197996327, 0.49807035961523188783, -0.49709410246427403801, -0.14591813796678579888),
    (0.0, 10.0, -0.2459357644513483352, 0.055671167283599391424, -0.04347274616886143667, -0.24901542420695388392),
    (0.0, 87.299999999999997, 0.010169517656394629582, -0.084786697306623720724, 0.084729844893856790324, 0.010655273862638205391),
    (0.5, 0.001, 0.025231321014980940973, -25.231312604540041424, 12.615652097049571201, 12615.68153359103543),
    (0.5, 3.0, 0.065008182877375778114, 0.45604882079463317885, -0.4668835179408624752, -0.010999953921729751694),
    (1.0, 0.10000000000000001, 0.049937526036242000321, -6.4589510947020266377, 0.49812630170362005651, 63.055272295669895983),
    (1.0, 5.0, -0.32757913759146522204, 0.1478631433912268448, -0.11208094379604525994, -0.33809025392727914903),
    (1.0, 49.899999999999999, -0.1027969573688854436, -0.046825393409105380754, 0.047848684733816432711, -0.10231215059586576817),
    (1.5, 7.25, -0.13464968568116875681, -0.26711357397714437567, 0.27175955002895796193, -0.11302632477152303987),
    (2.0, 5.0, 0.046565116277752215532, 0.36766288260552451799, -0.34620518410256610825, 0.00079799034901703760342),
    (2.2999999999999998, 0.69999999999999996, 0.032097651260729438944, -4.5973552714785848217, 0.10202960806730919864, 13.720332917681135365),
    (3.7000000000000002, 12.1, 0.22908369687452139314, -0.051925826172328935449, 0.039116081845883112832, 0.22080169890541472094),
    (5.0, 1.0, 0.00024975773021123443138, -260.40586662581222072, 0.0012278503130537828869, 1268.7509101000889849),
    (5.0, 30.0, -0.14324029551207707699, 0.031627359289264433312, -0.028735617735974172796, -0.14180246766296432435),
    (7.25, 7.25, 0.23087895758090895219, -0.40064156277532590401, 0.10332062407919751213, 0.20103645634557881989),
    (10.0, 2.0, 2.5153862827167367096e-7, -129184.54220803928264, 1.2346502937746958406e-6, 631362.88166428539551),
    (10.0, 10.0, 0.2074861066333588577, -0.35981415218340272205, 0.084369578631761188248, 0.16051488637815838441),
    (10.0, 25.0, -0.075179843948523283841, -0.14871839049980649757, 0.13816405245284769602, -0.065406565519766408623),
    (15.5, 40.0, 0.077044645221785832167, -0.10641891224110151286, 0.096991798252240311194, 0.072603782219715056717),
    (20.0, 0.10000000000000001, 3.9194377208586220087e-45, -4.0607084201263677101e+42, 7.8387821212665255642e-43, 8.1213099787236789968e+44),
    (20.0, 19.0, 0.11164834708850506713, -0.39341599752402874025, 0.050061167681355579793, 0.12370482813590954641),
    (20.0, 500.0, -0.035514222915127349391, -0.0036053691568370722023, 0.003638056628776609406, -0.035482206962163125316),
    (33.299999999999997, 60.0, -0.086495564086113915225, -0.072599200487017615942, 0.061446411869423555063, -0.071094618896540329988),
    (40.0, 41.0, 0.16362999007132056796, -0.16375919561939768769, 0.02993006902532632764, 0.064939119583815510214),
    (50.0, 200.0, 0.015693898978573084037, 0.055146861374236681886, -0.053437821914950581725, 0.015048567910079222661),
    (75.0, 80.0, 0.13996589368636113487, 0.050751714816458233415, -0.024506432244787720093, 0.047968855249717773185),
    (99.0, 150.0, -0.065216482291990803702, 0.03735829295418298441, -0.027683352194308539814, -0.049219597895259098605),
    (100.0, 1000.0, 0.011676135007802554492, -0.022438688257723274062, 0.022320318876621019532, 0.01162894187086486067),
    (0.25, 999.0, 0.0090377192056666601613, -0.023570672478613949296, 0.023566151310651212724, 0.009049517185804931057),
    (12.5, 333.30000000000001, 0.021921413993443057696, -0.03782650459860148285, 0.037767004456145303668, 0.02196284211151632483),
    (0.01, 0.01, 0.95378441004793735614, -3.0217772094232431364, 0.94906264690053169328, 63.739898366533046353),
    (60.0, 25.0, 5.7235154837222702458e-18, -1019678275738245.9967, 1.2510744620218568748e-17, 2220288636992160.6217),
    (9.9999999999999995e-7, 4.0, -0.3971498364738121338, -0.01694011548363003093, 0.066042702963274572398, -0.39792581429721227455),
    (32.383276000000002, 150.89163099999999, -0.03842748921374409553, 0.05331980094528307378, -0.051944317096379042762, -0.037717589030293347589),
    (65.093446999999998, 72.482664999999997, 0.020893006516090344272, 0.13894362316176161261, -0.062520514499626368131, 0.0046061169516017599566),
    (53.588200000000001, 365.72063200000002, -0.015471686094512650347, 0.038991607144995527171, -0.038549179298741402249, -0.015359187523875649497),
    (5.7998919999999998, 507.46036099999998, 0.011979838604076504682, 0.033332956455835778533, -0.033342600722486501626, 0.011946214773379110465),
    (3.7495660000000002, 433.67400099999998, 0.037199401620306218088, -0.0091775221859282857945, 0.0091342934346894444355, 0.037208617832794117629),
    (6.9855419999999997, 90.758477999999997, -0.062615672698581631637, -0.055807481275080855717, 0.055989811731093099049, -0.062121639418347279246),
    (42.451918999999997, 826.86078199999997, 0.027117661665965019442, 0.0059642927564197331708, -0.0059728693147150007875, 0.027078287208662516268),
    (12.380196, 223.27780300000001, -0.03664628969037207118, 0.038893193188238232353, -0.038751142549199629226, -0.036677371026824931414),
    (62.743321999999999, 947.71155699999997, -0.015618817207808090442, 0.020718921484362361737, -0.020665191344392165127, -0.015595531480259347365),
    (57.710295000000002, 396.71064100000001, -0.0012878826123362798002, 0.040253447112562990477, -0.039823624018301057494, -0.0013260145191765076952),
    (97.625511000000003, 46.630350999999997, 6.6518190032913096002e-23, -55794378835010880810.0, 1.2255724256914140132e-22, 1.0244523040216024852e+20),
    (85.846845999999999, 289.64480600000002, -0.045473476194637541692, -0.015280478705416840835, 0.014679993489945561813, -0.043401461129936881519),
    (14.425508000000001, 117.836348, 0.038196108523023634098, 0.06312307392128321358, -0.062813448000082663772, 0.037637279874976712559),
    (30.848182000000001, 816.13555299999996, 0.016742178816437037299, 0.022367360657295398473, -0.022361652952874582799, 0.016716495301779621527),
    (18.072638000000001, 581.621084, 0.03248112558546218498, -0.0063297628492558973934, 0.0062987588058587742385, 0.032470899970587127943),
    (63.891347000000003, 372.428923, 0.039583407402288131637, 0.012971025395600600941, -0.012833495849903138149, 0.038978679100143550748),
];

pub const ZERO_TABLE: &[(f64, usize, f64)] = &[
    // (nu, n_r, z)
    (0.0, 1, 2.4048255576957727686),
    (0.0, 2, 5.5200781102863106496),
    (0.0, 5, 14.930917708487785948),
    (0.0, 17, 52.624051841114996029),
    (0.5, 1, 3.1415926535897932385),
    (0.5, 2, 6.2831853071795864769),
    (0.5, 5, 15.707963267948966192),
    (0.5, 17, 53.407075111026485054),
    (1.0, 1, 3.8317059702075123156),
    (1.0, 2, 7.0155866698156187535),
    (1.0, 5, 16.470630050877632813),
    (1.0, 17, 54.185553641061320532),
    (1.5, 1, 4.4934094579090641753),
    (1.5, 2, 7.7252518369377071642),
    (1.5, 5, 17.22075527193076874),
    (1.5, 17, 54.959678287888935871),
    (2.0, 1, 5.1356223018406825563),
    (2.0, 2, 8.4172441403998648578),
    (2.0, 5, 17.959819494987826455),
    (2.0, 17, 55.729627053201144086),
    (2.5, 1, 5.7634591968945497914),
    (2.5, 2, 9.0950113304763551563),
    (2.5, 5, 18.689036355362822202),
    (2.5, 17, 56.495566261811978209),
    (0.29999999999999999, 1, 2.854097224376684416),
    (0.29999999999999999, 2, 5.9822213218635111336),
    (0.29999999999999999, 5, 15.398988047198192815),
    (0.29999999999999999, 17, 53.094422321206196497),
    (0.75, 1, 3.4910083741084221302),
    (0.75, 2, 6.6526355231218286887),
    (0.75, 5, 16.090969528199360868),
    (0.75, 17, 53.796870223876098128),
    (5.0, 1, 8.7714838159599540191),
    (5.0, 2, 12.338604197466943986),
    (5.0, 5, 22.217799896561267869),
    (5.0, 17, 60.270245072942795221),
    (10.25, 1, 14.754690886772786828),
    (10.25, 2, 18.729952412105802324),
    (10.25, 5, 29.211367643213149359),
    (10.25, 17, 67.949705879633124234),
    (20.0, 1, 25.41714081407252358),
    (20.0, 2, 29.96160379162515606),
    (20.0, 5, 41.413065513892636447),
    (20.0, 17, 81.575115548130173743),
    (37.5, 1, 44.019876205470963564),
    (37.5, 2, 49.299744204353928732),
    (37.5, 5, 62.125689857232253255),
    (37.5, 17, 104.74047355871584461),
];

pub const ANNULUS_TABLE: &[(f64, f64, usize, f64)] = &[
    // (nu, f, n_r, z)
    (0.0, 0.5, 1, 6.2460618391913844102),
    (0.0, 0.5, 2, 12.546871427984361306),
    (0.0, 0.5, 3, 18.83641508450315392),
    (1.0, 0.5, 1, 6.3931567616212700108),
    (1.0, 0.5, 2, 12.624699020746526253),
    (1.0, 0.5, 3, 18.888929850964545518),
    (3.0, 0.2, 1, 6.394599167333223127),
    (3.0, 0.2, 2, 9.873889488952993297),
    (3.0, 0.2, 3, 13.380651053433839081),
    (2.5, 0.3, 1, 5.9612459446032867748),
    (2.5, 0.3, 2, 9.9554549696764401234),
    (2.5, 0.3, 3, 14.165029643083557143),
    (0.5, 0.1, 1, 3.4906585039886591754),
    (0.5, 0.1, 2, 6.9813170079773183508),
    (0.5, 0.1, 3, 10.471975511965977526),
    (7.0, 0.7, 1, 13.331971679101234862),
    (7.0, 0.7, 2, 22.53899878075343876),
    (7.0, 0.7, 3, 32.503665961099762065),
    (0.0, 0.05, 1, 3.0644073032670531212),
    (0.0, 0.05, 2, 6.4253993060396989061),
    (0.0, 0.05, 3, 9.7667493772818548517),
];
