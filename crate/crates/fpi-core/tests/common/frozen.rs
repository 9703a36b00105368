// Numerical reference values computed with an independent
// implementation of the same model; regenerated wholesale, never
// edited by hand.
#![allow(dead_code)]

pub const TS_S: f64 = 6.666666666666667e-08;
pub const LAMBDA_C_M: f64 = 0.005;
pub const LAMBDA_RATIO: f64 = 1874999.9999999998;
pub const UPSILON_TAU_S: f64 = 3.555555555555556e-07;
pub const UPSILON_THETA_RAD: f64 = 0.7297276562269664;
pub const TAU_S: [f64; 3] = [2.8674417556808754e-08, 6.516408055035852e-08, 4.66422111606987e-08];
pub const THETA_RAD: [f64; 3] = [0.6202494859828215, -0.7987976963974089, 1.0904294212223522];
pub const GAMMA_MAG: [f64; 3] = [4.625346582209942e-05, 2.0353102218752387e-05, 2.8435427039745716e-05];
pub const GAMMA_PHASE: [f64; 3] = [5.550005491840885, 3.559811364734998, 3.7145546516687773];
pub const DBAR_TAU_S: f64 = 1.777777777777778e-08;
pub const DBAR_THETA_RAD: f64 = 0.03648638281134832;
pub const FAKE_TAU_S: [f64; 3] = [4.6452195334586535e-08, 8.294185832813629e-08, 6.441998893847648e-08];
pub const FAKE_THETA_RAD: [f64; 3] = [0.6658356212644322, -0.7478166882272393, 1.1765953012037909];
pub const FAKE_SCATTERERS: [f64; 6] = [11.84712072533908, 6.949397447261298, 11.632296245557999, -8.006684254018003, 7.78442130372501, 11.501723428145459];
pub const MINSEP_TAU_COMBINED: f64 = 0.00017813983698015262;
pub const MINSEP_AOD_COMBINED: f64 = 0.018239143948360015;
pub const PRECODER_N3_DIAG5_RE: f64 = 1.9666874540384298;
pub const PRECODER_N3_DIAG5_IM: f64 = 0.2559596964459416;
pub const STEER_LOS_E7_RE: f64 = 0.24420537256801295;
pub const STEER_LOS_E7_IM: f64 = -0.05351388613171343;
pub const CHAN_N1_E0_RE: f64 = -1.884545378784343e-05;
pub const CHAN_N1_E0_IM: f64 = -4.534567986180748e-05;
pub const CHAN_N1_E11_RE: f64 = -3.449462259980904e-07;
pub const CHAN_N1_E11_IM: f64 = 2.0055461057375936e-05;
pub const EPSILON: f64 = 340.0;
pub const M_AT_DESIGN_RE: [f64; 6] = [405.0458914012257, 51.83608083401969, 2.5452422010809053, 16.946060749015242, 10.040568343864106, 0.5654423845290307];
pub const M_AT_DESIGN_IM: [f64; 6] = [-1109.0913437500585, -98.77244432394188, 6.382186387486762, 71.09493197311076, -10.040568343864106, 0.6561283439244734];
pub const JBREVE_SIGMA1: [f64; 16] = [184095228.04054058, -57.98881894684822, 142040808.300445, -47.46796490058191, -57.98881894684822, 3.467403214024837e-05, -49.117788011823414, 2.3888435171407436e-05, 142040808.300445, -49.117788011823414, 184095228.04054058, -56.04102574270232, -47.46796490058191, 2.3888435171407436e-05, -56.04102574270232, 3.23838121597052e-05];
pub const XI_SIGMA1: f64 = 0.10051611675769456;
pub const PSI_SIGMA1: f64 = 0.0271584773393428;
pub const TR_JBREVE_INV_SIGMA1: f64 = 170826.62823417276;
pub const XI_FROM_DET_SIGMA1: f64 = 0.1005161167576946;
pub const DELTA_TAU_MAX_S: f64 = 1.7319858816013598e-08;
pub const DELTA_THETA_MAX_RAD: f64 = 0.03554656869372627;
pub const ASSUMPTIONS_AT_DESIGN: [bool; 5] = [true, false, false, false, false];
pub const B02_THETA_F_RAD: f64 = 0.7661950172282148;
pub const B02_DELTA_THETA_RAD: f64 = 0.11239687776781254;
pub const B02_DELTA_TAU_S: f64 = 3.9879244263153175e-09;
pub const B02_XI_SIGMA1: f64 = 0.0809369906174117;
pub const B02_PSI_SIGMA1: f64 = 0.01618048628364312;
pub const B02_TR_JBREVE_INV_SIGMA1: f64 = 151366.56901434122;
pub const RX_ENERGY_EFF: f64 = 3.033897775600575e-06;
pub const SIGMA2_0DB: f64 = 1.1851163185939747e-08;
pub const VARSIGMA2: f64 = 3.255237310214287e-09;
pub const FIM12_G1_SIGMA2P5: [f64; 144] = [69751397.7663933, -8702851.809243044, 6575580.985366698, -17.64895761179188, 1.7588457970470133, 0.12074126830509276, -16406.83402591808, -2574.824101349529, -3527.824417298532, -18216.449804468964, -7971.435139162393, 2020.954322776187, -8702851.809243044, 12403378.585767312, -4539091.442730025, 2.0912829681719214, -4.068633827763489, 1.7984180730756378, 9.338687889485346, -4191.594420117813, -1.7740358492680628, 3686.137238158021, 9431.230220137493, -3781.7905879758932, 6575580.985366698, -4539091.442730025, 23479224.20451616, -5.674785054154139, 1.8237174049711968, -3.399171341199145, -2339.2465720327064, 4421.970482850234, -7301.03942537606, -880.5197480609088, -2891.744479526915, 11316.714074473186, -17.64895761179188, 2.0912829681719214, -5.674785054154139, 1.1327019192928863e-05, -6.659200771252777e-07, 8.986495338561003e-07, 0.005647130825473044, 0.0009923025393695079, 0.0018183294298311434, 0.006642263294739846, 0.0028143261615267653, -0.002948867386021019, 1.7588457970470133, -4.068633827763489, 1.8237174049711968, -6.659200771252777e-07, 1.9031062024819267e-06, -7.217564987709596e-07, 0.00042600665043282954, 0.0019355543329362193, -0.0005387116022224763, -0.0006228055228490236, -0.0034172795692139686, 0.0012260348657323142, 0.12074126830509276, 1.7984180730756378, -3.399171341199145, 8.986495338561003e-07, -7.217564987709596e-07, 1.3284551393914976e-06, -0.0003962999464432251, -0.0009843531566921097, 0.001115577492108238, 0.0004670644154024424, 0.0016220915348786038, -0.002679998233504356, -16406.83402591808, 9.338687889485346, -2339.2465720327064, 0.005647130825473044, 0.00042600665043282954, -0.0003962999464432251, 11.727909815289747, 2.9665920504852226, 0.0019291715865419558, 0.0, 0.45935612346774973, -2.1717733867068625, -2574.824101349529, -4191.594420117813, 4421.970482850234, 0.0009923025393695079, 0.0019355543329362193, -0.0009843531566921097, 2.9665920504852226, 10.610605812091828, -3.347235223198533, -0.45935612346774973, 0.0, 1.522029440114941, -3527.824417298532, -1.7740358492680628, -7301.03942537606, 0.0018183294298311434, -0.0005387116022224763, 0.001115577492108238, 0.0019291715865419558, -3.347235223198533, 10.928477591810884, 2.1717733867068625, -1.522029440114941, 0.0, -18216.449804468964, 3686.137238158021, -880.5197480609088, 0.006642263294739846, -0.0006228055228490236, 0.0004670644154024424, 0.0, -0.45935612346774973, 2.1717733867068625, 11.727909815289747, 2.9665920504852226, 0.0019291715865419558, -7971.435139162393, 9431.230220137493, -2891.744479526915, 0.0028143261615267653, -0.0034172795692139686, 0.0016220915348786038, 0.45935612346774973, 0.0, -1.522029440114941, 2.9665920504852226, 10.610605812091828, -3.347235223198533, 2020.954322776187, -3781.7905879758932, 11316.714074473186, -0.002948867386021019, 0.0012260348657323142, -0.002679998233504356, -2.1717733867068625, 1.522029440114941, 0.0, 0.0019291715865419558, -3.347235223198533, 10.928477591810884];
pub const DU_TAU0_RE: f64 = 587.2026017594114;
pub const DU_TAU0_IM: f64 = 76.16097465630946;
pub const DU_THETA1_RE: f64 = 2.175492944534894e-06;
pub const DU_THETA1_IM: f64 = 0.00012843674495540588;
pub const DU_REG0_RE: f64 = -0.8250311882540929;
pub const DU_REG0_IM: f64 = 0.7071823642381105;
pub const DU_IMG1_RE: f64 = -0.26425031823025197;
pub const DU_IMG1_IM: f64 = 0.10142367482591447;
pub const LEAKED14_TRACE: f64 = 521137378.0933098;
pub const LEAKED14_FROB: f64 = 364634581.7011262;
pub const LEAKED14_ROW12: [f64; 14] = [117179171.90107161, -5027500.731215694, 68828007.38634676, -38.10579059862883, 1.811215891648283, -6.697766309105024, -45329.76749257642, -5608.890419191926, -32385.420222156146, -14136.383827983589, -5566.078915463013, 23362.448501031482, 108936974.93319583, -34.528468641036326];
pub const LEAKED14_ROW13: [f64; 14] = [-28.071056175184665, -0.6255186061719084, -26.620744859371282, 2.302794533600616e-05, -5.4791129092573795e-08, 5.520692834380476e-06, 0.010954572334186749, 0.0018041440396562047, 0.013793064260536801, 0.008804895023044745, -0.0013003830843663347, -0.012480091493691125, -34.528468641036326, 2.5543401213207686e-05];
pub const LOC_BOB_0DB_M: f64 = 0.637030475222585;
pub const LOC_EVE_FPI_0DB_M: f64 = 7.288606458488823;
pub const LOC_EVE_GAUSS_0DB_M: f64 = 1.2934388208312044;
pub const LOC_EVE_LEAKED_0DB_M: f64 = 1.1189612007159024;
pub const TOA_BOB_0DB_S: f64 = 2.118532227064489e-09;
pub const TOA_EVE_0DB_S: f64 = 2.4231143915344748e-08;
pub const AOD_BOB_0DB_RAD: f64 = 0.005029285348198524;
pub const AOD_EVE_0DB_RAD: f64 = 0.0615601126651793;
pub const TR_ZETA0_INV_0DB: f64 = 0.00012794411729633;
pub const XI_0DB: f64 = 1.1912329025124111e-09;
pub const PSI_0DB: f64 = 3.218595468301982e-10;
pub const TR_ASYMP_OVER_G_0DB: f64 = 0.0001265308904816905;
pub const PI_TAU0_DPX: f64 = -2.7124449040224496e-09;
pub const PI_TAU1_DV1X: f64 = 1.9920640371808527e-09;
pub const PI_THETA1_DPY: f64 = -0.08261495260510614;
pub const PI_THETAF0_DVF0X: f64 = -0.0549074440705933;
pub const LOC_EVE_MULTI_0DB_M: f64 = 78.3554864936431;
pub const SIGMA2_MULTI_0DB: f64 = 2.1358276668666533e-08;
