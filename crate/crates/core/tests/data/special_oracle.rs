// Reference values computed with mpmath at 50 significant digits.
// Generated by tools/gen_special_tables.py; do not edit by hand.

pub static AIRY_ORACLE: &[(f64, f64, f64)] = &[
    (-40.0, -0.045933923437957250, -1.3890908752607184),
    (-39.14393787185331, 0.14389306077245554, -1.0858316317544670),
    (-38.82240171706519, -0.21871156652344105, -0.35672351017696178),
    (-38.50065758236271, 0.039368614216133695, 1.3842394291979781),
    (-38.37893782305988, 0.18162038760552680, 0.84141239206408407),
    (-38.2187887283258, 0.21317925896372595, -0.47919098532393502),
    (-37.57197490748724, -0.084733282013585766, 1.2961085923637267),
    (-37.37573464361096, 0.16688318362064326, 0.95248113536730478),
    (-37.08763961665563, 0.12209303790660375, -1.1763104113812507),
    (-36.69833024192503, -0.22316368659512704, 0.31571358269234394),
    (-36.37568820412592, 0.13159308962796534, 1.1366387969015495),
    (-35.529108293631545, -0.12993749372315544, 1.1381490060084027),
    (-34.99381939721649, 0.12324062912901442, -1.1616549161409721),
    (-34.79479309528264, -0.13413331393694211, -1.1197136135452445),
    (-34.76234647630034, -0.16779444021248582, -0.94884014430629034),
    (-34.48924098811756, -0.15484141262031479, 1.0198806717599994),
    (-33.94481580383094, 0.14780368934530474, -1.0538940132863418),
    (-33.00274088593276, 0.23505207742223335, -0.070571915675902799),
    (-32.44187777207523, -0.23469235374857286, 0.15974412265011250),
    (-32.355137868281076, -0.19335183487961317, 0.77374756337132771),
    (-31.680404702422496, 0.065826529719744805, -1.2856960799133527),
    (-31.08570308410949, -0.021595114434465772, 1.3265647655361084),
    (-29.84252360054294, 0.11314996723388165, 1.1657686942937203),
    (-29.83831817378053, 0.11802223427430641, 1.1512629667118600),
    (-29.331303348213012, -0.030709227207352067, -1.3026687715178203),
    (-29.18815293268169, -0.19033985325372510, -0.81540862155686034),
    (-28.680728391707767, 0.11457319256376091, 1.1534756103460517),
    (-28.518266595736545, 0.23863882593270031, 0.27735838485208935),
    (-28.406139968824093, 0.22645034522534782, -0.48774272895837894),
    (-28.305515802023713, 0.14793036286986006, -1.0350738543338752),
    (-27.415760441150947, 0.19394792120251538, 0.79889074033924044),
    (-27.21253603505274, 0.22784305740837190, -0.49570716400210058),
    (-26.923033893940993, -0.080733777340856012, -1.2157209099292346),
    (-26.585586452336983, -0.21724701397384842, 0.61964584165269911),
    (-26.426880499428943, -0.060846832412060978, 1.2397909767606776),
    (-26.1402951791732, 0.23450950570035241, 0.43796348739684378),
    (-26.11067241650998, 0.24475020159319353, 0.25215742641685228),
    (-25.696729308570074, -0.083296236865977346, -1.1988485280622790),
    (-24.391657820363147, -0.14054114598323284, -1.0456113864212111),
    (-24.08858459855432, -0.22249984341740458, 0.60574181109850531),
    (-23.693372476339306, 0.19529023467485165, 0.80566026658828192),
    (-23.658053954728974, 0.22072773029478091, 0.63129829990842537),
    (-22.624571678981123, -0.069189578339234349, 1.1848828236082681),
    (-22.482473932591382, 0.10186959392710268, 1.1307310922931498),
    (-22.40403917128981, 0.18157524793630348, 0.87838322121254516),
    (-22.34794469176935, 0.22391411544144468, 0.62241170720950021),
    (-20.44364571950211, -0.10918128501801170, -1.0947447365567236),
    (-19.639190820049016, 0.20721925080773335, 0.75584209254240059),
    (-18.587320706343494, -0.19505340944748859, 0.81294957847543146),
    (-18.181552443888506, 0.22050054585819552, 0.69097136628335012),
    (-17.67788704513192, 0.019169077359825757, -1.1537991914076470),
    (-17.436084275501482, -0.22352712865866524, -0.67992929573062812),
    (-17.079595249221207, -0.18239414216048712, 0.86179716291006725),
    (-16.34409970695224, 0.21116750511066186, -0.74379172255162205),
    (-16.211426978763235, 0.087555408021291454, -1.0744689474135194),
    (-16.086432104267253, -0.051999929045145073, -1.1113127743966071),
    (-15.837463983405932, -0.26152839032127295, -0.43247765011290942),
    (-15.405536026429292, -0.071558834733820660, 1.0807460115819089),
    (-15.131317249824853, 0.20866575700249123, 0.76459784372612049),
    (-15.082917161887401, 0.24177109949418380, 0.59944042874173180),
    (-14.08311926912771, -0.28942985525888267, 0.11624721159936895),
    (-13.337190122212633, 0.28466073045698865, 0.29111363165669838),
    (-13.32282587115878, 0.28844899666908516, 0.23623285841721035),
    (-13.218224824087812, 0.29184950941355438, -0.17146847132423448),
    (-12.918716183086229, 0.094378597935642568, -1.0126121649963491),
    (-12.263175941813422, -0.27369373820241497, 0.43715259075787317),
    (-11.225215655884178, 0.20382665631219787, -0.77014205557917320),
    (-11.037030525982559, 0.029253230816205399, -1.0231373309905613),
    (-10.866872264788324, -0.14031433358156583, -0.91724639875082893),
    (-9.5, 0.31910324771912820, -0.10809531881187124),
    (-9.472882705296175, 0.31506251345942625, -0.18971151814355918),
    (-9.252917722333013, 0.20743472368901188, -0.74948002950942205),
    (-9.236003124653479, 0.19448881554501875, -0.78091092016819325),
    (-9.192526782338614, 0.15894357959086487, -0.85181241056327602),
    (-9.135805869352811, 0.10852530402977431, -0.92151240265397331),
    (-9.003931555833724, -0.018296393324070724, -0.97637943015573982),
    (-8.991136862032377, -0.030772326397668971, -0.97355484107438415),
    (-8.629117713924753, -0.30297430989112405, -0.38664506924898947),
    (-8.508980600625485, -0.32988683135401574, -0.057525440725718305),
    (-8.123164774643858, -0.16241711253650928, 0.82752154126791766),
    (-7.282383240609732, 0.33221888671825518, -0.22300465221729724),
    (-6.309385879688293, -0.33444795411857847, -0.31886929017313044),
    (-6.190747796708337, -0.35707653785708373, -0.060618509153563307),
    (-5.983271493227818, -0.32308377506677520, 0.37862701536829960),
    (-5.574879417634072, -0.046869413797372114, 0.85812079419975152),
    (-5.389941294129436, 0.11126676300500898, 0.82541090710000451),
    (-5.255205612478292, 0.21534186614844364, 0.70750502551423320),
    (-5.200471686336044, 0.25227835752510795, 0.64052434590237444),
    (-5.0, 0.35076100902411432, 0.32719281855444314),
    (-4.7052027505149425, 0.36846262234119146, -0.20598850257824304),
    (-4.592862788320907, 0.33474774699045044, -0.39056085538811808),
    (-3.86253248572212, -0.17500154287147407, -0.72410717408665584),
    (-3.444441833159189, -0.39256484367866490, -0.26929453080845589),
    (-3.032010115259027, -0.38829482358103949, 0.27754403945100474),
    (-2.748656861965223, -0.26774935749778133, 0.55232816872558087),
    (-2.340199701955285, -0.0014671349370122842, 0.70120723196303625),
    (-2.338107410459767, 2.7433193406662830e-17, 0.70121082272069136),
    (-1.7, 0.38860703739632876, 0.44612455463607502),
    (-1.6843440345189435, 0.39551035303778146, 0.43573768765613424),
    (-1.0698194487333836, 0.53493450820630428, 0.028530747164241472),
    (-1.0, 0.53556088329235212, -0.010160567116645209),
    (-0.5973961393484899, 0.49438669317084488, -0.17813367242057933),
    (-0.06124132084943312, 0.37086460195702329, -0.25813383223782310),
    (0.0, 0.35502805388781724, -0.25881940379280680),
    (1.0, 0.13529241631288142, -0.15914744129679321),
    (1.1480373449964887, 0.11319878346220770, -0.13947198154875361),
    (1.7, 0.054324792732919471, -0.077374889525325032),
    (1.7082583978425845, 0.053688942125221884, -0.076614841499911512),
    (2.0122160347583176, 0.034280766603155812, -0.052242422274043763),
    (2.3172253905411893, 0.021233521795004916, -0.034316898496747937),
    (2.5987168906408655, 0.013318259617595165, -0.022605682417105376),
    (2.8082644730859556, 0.0092750413184486559, -0.016283269464115667),
    (3.7224405692514964, 0.0016693773947103548, -0.0033247643587993841),
    (3.747646016391606, 0.0015875208948854674, -0.0031714912020498055),
    (4.195326188794667, 0.00063369884532882801, -0.0013333723010827439),
    (4.229238004533997, 0.00058997868641959881, -0.0012460129512873016),
    (4.985374710311383, 0.00011202145764979440, -0.00025545861267965108),
    (5.0, 0.00010834442813607442, -0.00024741389086846248),
    (5.425942000563019, 4.0181118406831899e-5, -9.5365549425432875e-5),
    (5.719416966342216, 1.9846365694722910e-5, -4.8294789406040453e-5),
    (6.7029591151168475, 1.6474974705207916e-6, -4.3247863466700511e-6),
    (7.020656964137679, 7.0883021925981787e-7, -1.9026074945368854e-6),
    (7.5702074604584055, 1.5776101474972122e-7, -4.3912758090619544e-7),
    (8.043225069243398, 4.1460949219429774e-8, -1.1884115481395711e-7),
    (8.114107723884942, 3.3823135637615060e-8, -9.7361721861641415e-8),
    (8.346395878527268, 1.7251037129431732e-8, -5.0342560060203548e-8),
    (8.837450259480299, 4.0333082127565179e-9, -1.2101683388348627e-8),
    (8.979666405384812, 2.6279666940494864e-9, -7.9465414809810082e-9),
    (9.482909831987293, 5.6209092205512416e-10, -1.7454380330830308e-9),
    (9.878530819928969, 1.6251003213715365e-10, -5.1480479467676400e-10),
    (10.0, 1.1047532552898686e-10, -3.5206336767389236e-10),
    (12.0, 1.3931846888753608e-13, -4.8547365549853085e-13),
];

pub static BESSEL_ORACLE: &[(f64, f64, f64)] = &[
    (0.0, 1.0000000000000000, 0.0),
    (1.0, 0.76519768655796655, 0.44005058574493352),
    (2.404825557695773, -6.1087652597367304e-17, 0.51914749728946676),
    (2.4150986017041243, -0.0053217724595549973, 0.51691189641200430),
    (2.599313751773047, -0.096481790778245598, 0.47100889797481506),
    (3.302837724561658, -0.34492078672541439, 0.21949637897992292),
    (4.754953190883371, -0.25368605376096472, -0.29014500924825064),
    (5.0, -0.17759677131433830, -0.32757913759146522),
    (6.151410648629496, 0.19015111466941422, -0.24431761956600805),
    (8.53473046510147, 0.032449571430949889, 0.27329960264338482),
    (8.848379177507182, -0.051923690998677476, 0.26042983776818291),
    (9.32569975303088, -0.16274609558140182, 0.19574989697944792),
    (10.943271673468047, -0.18096373619919433, -0.16768507662938713),
    (11.987981962872896, 0.044999189190553708, -0.22422837000887575),
    (12.033909951339727, 0.055226865387462196, -0.22107469058997396),
    (12.568240061361212, 0.15779598278043669, -0.15421313043808219),
    (14.939350921212323, -0.0017413376403484691, 0.20642249643176382),
    (16.559961775644318, -0.19568339075064855, -0.017479982220992460),
    (17.13534554552305, -0.15517850213641528, -0.11883693413313708),
    (20.018919894784638, 0.16573097781682782, 0.069916413500600171),
    (20.735538752837247, 0.080314996601917846, 0.15768059809190058),
    (22.996858382721918, -0.16253614265037676, -0.039014252793225440),
    (23.274180626454942, -0.14573319296184678, -0.081304818466043364),
    (25.706760621553236, 0.15368864090255331, -0.030779332998972614),
    (28.96235045518636, -0.14748276718670822, 0.012507041319283705),
    (29.443867253712817, -0.13654913616533516, -0.056848408908574737),
    (30.0, -0.086367983581040211, -0.11875106261662294),
    (31.412283625364125, 0.099887951840307175, -0.099845272908725293),
    (36.02948961194452, -0.10309496632177190, -0.085338063409553153),
    (38.046256170387814, 0.11694445840594282, -0.053743236638020369),
    (41.93267476371665, -0.11757611000919530, -0.038238197873004601),
    (42.51946115112477, -0.076973492996480187, -0.096024586401074055),
    (45.37217316174227, 0.097644916548286625, 0.068129821106911031),
    (47.072764354592024, -0.077690474432939935, 0.085710624688391629),
    (47.433719695321265, -0.10285158175633211, 0.052229858246338381),
    (49.1811743097935, -0.033779139957936310, -0.10898913275610863),
    (50.43532720641801, 0.091565240349267728, -0.064193033232079687),
    (50.83614258622764, 0.10927427562235522, -0.023040872137006042),
    (53.247802773846196, -0.063866283393948862, 0.088153144057948862),
    (58.14701862307503, 0.072083327734406946, 0.076464798887939441),
    (59.19883515863067, -0.029837982810883913, 0.099065366405185372),
    (59.408045781413385, -0.049726531911110191, 0.090375396951176978),
    (60.54573334532427, -0.10230237449768799, -0.0078133985397007029),
    (61.13997191059377, -0.080468588994329564, -0.063405282072251119),
    (64.39581067486813, 0.070920103919830470, 0.070238334606015707),
    (65.92672911943218, -0.066025952879962037, 0.072280282730727445),
    (69.23573957617937, 0.075367771771418259, -0.058739817658017922),
    (70.52552174237061, 0.077141880834250490, 0.056007297365401801),
    (71.75192034081132, -0.025935261955689000, 0.090373445435574311),
    (73.44239168250827, -0.085801619716181484, -0.036725910247554443),
    (75.30298866573253, 0.058420355429468371, -0.070613581696794529),
    (77.29475632239206, 0.040393543651110922, 0.081530752763357432),
    (77.91833078873869, -0.014606579575005207, 0.089109154171625123),
    (78.67739683317654, -0.071641614104313012, 0.053941015897587762),
    (80.75684311631723, -0.012452421920924890, -0.087987563613174349),
    (81.51646886517379, 0.051269707668867309, -0.071665899246254566),
    (84.49977429819853, -0.038587480921719754, 0.077521714360286023),
    (88.49071237461436, 0.081952091568806856, -0.021399116293234799),
    (91.0155558077245, -0.053454266716874865, 0.064028097673309489),
    (91.80245503975728, -0.082933329438976579, 0.0070737534063977325),
    (95.09422848325757, 0.081674154191151340, 0.0053142172568501731),
    (100.0, 0.019985850304223122, -0.077145352014112158),
    (100.26252756771467, 0.039296382785879261, -0.069124765244668979),
    (100.78905995629349, 0.068630071132978445, -0.039737381525352647),
    (102.75864458581097, 0.010182486804965740, 0.078098756399349772),
    (103.89214317989595, -0.066029077331558117, 0.041727798939128816),
    (104.27538643409464, -0.076819557780620713, 0.013909888475208806),
    (104.44685037740047, -0.078065120687742661, 0.00058672384604964389),
    (109.10412314230653, 0.0051420612306177853, 0.076237699464914829),
    (109.88693519675425, -0.049927721630297478, 0.057224008652532330),
    (110.53197749471056, -0.074219697915726487, 0.015506641826283524),
    (113.68312318325606, 0.073330208859116077, -0.014596612174361902),
    (114.50812606027245, 0.060497840172300678, 0.043848536875488141),
    (119.00387519849991, 0.029000251720330247, -0.067024187828262092),
    (121.49816987836874, 0.017176356215196529, 0.070389671861133763),
    (124.44724697414375, -0.029950059160729022, -0.065071082192475856),
    (125.86554667364112, 0.059310308567383178, -0.039009863012708196),
    (129.43160900221264, -0.069235949425002126, 0.010909700119139803),
    (129.67138213697197, -0.069844922421373850, -0.0058493018566884351),
    (130.37579193111065, -0.049473466967409708, -0.049538854305280661),
    (130.5301950301103, -0.041271049304997287, -0.056495421960487754),
    (131.8899251023437, 0.046200809773308827, -0.051713112232129625),
    (135.17527250077822, -0.052508788297634864, 0.043991851843140298),
    (139.27246973356742, 0.065404222302502032, 0.017360812561467807),
    (140.95462830211548, -0.024143639546593807, 0.062632719784719647),
    (144.89699940244944, 0.060986326987804948, -0.025755917645435644),
    (146.2205735970081, 0.039918470087273779, 0.052675573241497309),
    (152.01562359467167, 0.058742343730797447, 0.027344266436493197),
    (152.18802144843474, 0.053183772798470436, 0.036979509421978956),
    (152.36789758593878, 0.045714023295883073, 0.045849061523841601),
    (153.07115841392033, 0.0053015383613276897, 0.064289354765816556),
    (153.09944968545952, 0.0034810000349390202, 0.064401704536334352),
    (153.55396697124823, -0.025104374425571808, 0.059211495134823910),
    (153.60980027043743, -0.028368914838422060, 0.057697050570703091),
    (157.22742407897107, 0.051099536440692592, -0.037756745084940575),
    (158.14525204358281, 0.060986027434652117, 0.017692120874622513),
    (159.32281861118128, 0.0071775843449622271, 0.062826081691577328),
    (165.55519502445043, 0.010159274037541913, 0.061203947967169534),
    (166.25103143831993, -0.031350505610125987, 0.053257587010052617),
    (166.81589173536605, -0.054946444423139865, 0.028069685315771663),
    (167.2605441602772, -0.061666133785819707, 0.0016669461764807233),
    (168.09870803575836, -0.042513812892997302, -0.044620888654964668),
    (168.63243693137528, -0.013942248060102091, -0.059881294356083025),
    (170.94792087126146, 0.053085836396547596, 0.030254148510124011),
    (175.043939215446, -0.0060545460003891939, -0.060019553508506127),
    (177.38634245809627, 0.046917444976718896, 0.037383264811737292),
    (177.76945719995481, 0.029559379959244409, 0.052115860791729506),
    (178.89953867098765, -0.034342263064594103, 0.048680507702376472),
    (180.77657982364067, -0.035964813479363134, -0.047302427742655539),
    (182.18717607151137, 0.040703145483378863, -0.042755201535645493),
    (186.3834947217197, -0.056719907093259458, -0.014240658734813713),
    (186.93446043007208, -0.040890535314470701, -0.041745193262417158),
    (188.06103141534086, 0.019961779053027838, -0.054597755408385521),
    (188.85267061171362, 0.052800054192469153, -0.024008353927329837),
    (189.6924993066736, 0.053109707771583736, 0.023278979239985071),
    (190.12315254484153, 0.038556952205967877, 0.043250243245450352),
    (190.608581315766, 0.013952117490172328, 0.056119403000161792),
    (192.0754881274351, -0.054125586463970558, 0.019476370313988402),
    (192.18762775410846, -0.055964548669795645, 0.013287578588687017),
    (193.6131952383797, -0.021311693954639637, -0.053289619143955615),
    (194.44281066090184, 0.024827732688909204, -0.051488678822228236),
    (196.15838618473904, 0.047222958730455846, 0.031986113167090178),
    (198.54754714659938, -0.055912229054349706, 0.0088145010775936380),
    (198.7740768273391, -0.056462892130717845, -0.0039711445319517779),
    (198.81801962776794, -0.056233963073301250, -0.0064464990054701942),
    (199.63606390855836, -0.033773316171354594, -0.045342377228544254),
    (200.0, -0.015437439930565092, -0.054304538182378223),
];
