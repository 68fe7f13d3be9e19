#include "shockcast/fixture.hpp"

#include "shockcast/errors.hpp"

namespace shockcast {

namespace {

GoldenFixture build_fixture() {
  GoldenFixture f;
  f.window_start = Quarter(2020, 1);
  // clang-format off
  f.sectors.push_back({"FARM", "Farm", "ARIMA(0,1,0)", "Random walk", -38.88, {
      {18.16851, 18.07062, -0.09789289},
      {18.16851, 17.89125, -0.27726308},
      {18.16851, 18.18444, 0.01592916},
      {18.16851, 18.54236, 0.37385135},
      {18.16851, 18.24560, 0.07709573},
      {18.16851, 18.68773, 0.51922607},
      {18.16851, 18.62178, 0.45327377},
      {18.16851, 18.38392, 0.21541231},
      {18.16851, 18.48193, 0.31342446},
      {18.16851, 18.58851, 0.42000088},
      {18.16851, 18.56654, 0.39803591},
      {18.16851, 18.57592, 0.40741426},
      {18.16851, 18.46649, 0.29797683},
      {18.16851, 18.33809, 0.16957942},
  }});
  f.sectors.push_back({"UTL", "Utilities", "ARIMA(1,1,0) with drift", "AR with drift", -195.07, {
      {18.56681, 18.59627, 0.029465380},
      {18.58017, 18.60524, 0.025071353},
      {18.59310, 18.65116, 0.058060590},
      {18.60590, 18.66070, 0.054795887},
      {18.61867, 18.65776, 0.039083191},
      {18.63143, 18.67577, 0.044342557},
      {18.64419, 18.66939, 0.025203604},
      {18.65694, 18.65236, -0.004582726},
      {18.66970, 18.66072, -0.008975215},
      {18.68245, 18.66427, -0.018177012},
      {18.69521, 18.65578, -0.039423099},
      {18.70796, 18.69664, -0.011316736},
      {18.72071, 18.70939, -0.011323244},
      {18.73347, 18.72283, -0.010634483},
  }});
  f.sectors.push_back({"CONS", "Construction", "ARIMA(0,1,0) with drift", "Random walk with drift", -233.73, {
      {20.53535, 20.52920, -0.006153852},
      {20.54898, 20.43943, -0.109547048},
      {20.56261, 20.52514, -0.037466292},
      {20.57624, 20.53204, -0.044198487},
      {20.58987, 20.53768, -0.052188495},
      {20.60350, 20.54956, -0.053935623},
      {20.61712, 20.57584, -0.041285459},
      {20.63075, 20.59461, -0.036139678},
      {20.64438, 20.61742, -0.026957691},
      {20.65801, 20.62636, -0.031645067},
      {20.67164, 20.64051, -0.031124884},
      {20.68527, 20.65443, -0.030838342},
      {20.69889, 20.67194, -0.026957379},
      {20.71252, 20.68736, -0.025162660},
  }});
  f.sectors.push_back({"MAN", "Manufacturing", "ARIMA(0,1,0) with drift", "Random walk with drift", -244.79, {
      {20.90446, 20.89607, -0.008393570},
      {20.91308, 20.84700, -0.066076739},
      {20.92170, 20.88717, -0.034528975},
      {20.93032, 20.91854, -0.011786348},
      {20.93894, 20.91702, -0.021925376},
      {20.94756, 20.93585, -0.011711461},
      {20.95619, 20.93859, -0.017594648},
      {20.96481, 20.96615, 0.001339304},
      {20.97343, 20.98616, 0.012733796},
      {20.98205, 20.99989, 0.017839575},
      {20.99067, 21.03013, 0.039457200},
      {20.99929, 21.03462, 0.035330132},
      {21.00791, 21.04379, 0.035878698},
      {21.01653, 21.05584, 0.039305078},
  }});
  f.sectors.push_back({"WHO", "Wholesale trade", "ARIMA(0,1,0) with drift", "Random walk with drift", -238.21, {
      {20.22889, 20.25308, 0.024194725},
      {20.23765, 20.20319, -0.034462225},
      {20.24642, 20.24081, -0.005614076},
      {20.25519, 20.25674, 0.001546734},
      {20.26396, 20.25268, -0.011278539},
      {20.27272, 20.27419, 0.001465980},
      {20.28149, 20.30178, 0.020286354},
      {20.29026, 20.33185, 0.041590435},
      {20.29903, 20.35813, 0.059107222},
      {20.30779, 20.35978, 0.051990800},
      {20.31656, 20.40168, 0.085117917},
      {20.32533, 20.40783, 0.082499261},
      {20.33409, 20.43131, 0.097218425},
      {20.34286, 20.44608, 0.103220092},
  }});
  f.sectors.push_back({"RET", "Retail trade", "ARIMA(0,1,1) with drift", "MA with drift", -261.7, {
      {20.42273, 20.43195, 0.00922234},
      {20.43100, 20.37091, -0.06009800},
      {20.43928, 20.47131, 0.03203222},
      {20.44755, 20.49459, 0.04704262},
      {20.45583, 20.50350, 0.04767609},
      {20.46410, 20.54173, 0.07762984},
      {20.47237, 20.54582, 0.07344234},
      {20.48065, 20.58516, 0.10451716},
      {20.48892, 20.56034, 0.07141526},
      {20.49719, 20.56111, 0.06391646},
      {20.50547, 20.58772, 0.08225573},
      {20.51374, 20.58813, 0.07438660},
      {20.52201, 20.61603, 0.09401104},
      {20.53029, 20.61720, 0.08691329},
  }});
  f.sectors.push_back({"TRANS", "Transportation and warehousing", "ARIMA(0,1,0) with drift", "Random walk with drift", -235.13, {
      {20.08419, 20.07482, -0.009370581},
      {20.09860, 20.01463, -0.083970333},
      {20.11301, 20.07318, -0.039839512},
      {20.12743, 20.10872, -0.018708576},
      {20.14184, 20.11306, -0.028782966},
      {20.15626, 20.16457, 0.008307266},
      {20.17067, 20.20405, 0.033382259},
      {20.18509, 20.23436, 0.049276182},
      {20.19950, 20.25187, 0.052367600},
      {20.21392, 20.25840, 0.044485946},
      {20.22833, 20.29297, 0.064639808},
      {20.24274, 20.29200, 0.049253502},
      {20.25716, 20.31560, 0.058444174},
      {20.27157, 20.32877, 0.057196374},
  }});
  f.sectors.push_back({"FIN", "Finance and insurance", "ARIMA(1,1,0)(0,0,1)[4] with drift", "AR and seasonal MA with drift", -173.17, {
      {20.62457, 20.67137, 0.04679806},
      {20.64209, 20.70152, 0.05943327},
      {20.65167, 20.70140, 0.04973617},
      {20.65096, 20.75058, 0.09962014},
      {20.66294, 20.76529, 0.10234782},
      {20.67015, 20.77214, 0.10199138},
      {20.67915, 20.75090, 0.07175580},
      {20.68748, 20.78957, 0.10209810},
      {20.69606, 20.80174, 0.10568484},
      {20.70454, 20.78463, 0.08008795},
      {20.71306, 20.80946, 0.09639636},
      {20.72157, 20.80067, 0.07910170},
      {20.73009, 20.81664, 0.08654997},
      {20.73860, 20.83563, 0.09703279},
  }});
  f.sectors.push_back({"RE", "Real estate", "ARIMA(0,2,1)", "MA with double differencing", -177.43, {
      {19.62940, 19.63129, 0.001886092},
      {19.63935, 19.52807, -0.111286751},
      {19.64931, 19.63254, -0.016764850},
      {19.65926, 19.67062, 0.011363035},
      {19.66921, 19.72948, 0.060268903},
      {19.67917, 19.74379, 0.064622668},
      {19.68912, 19.77718, 0.088061295},
      {19.69907, 19.80214, 0.103070442},
      {19.70903, 19.81231, 0.103282509},
      {19.71898, 19.78160, 0.062624764},
      {19.72893, 19.76918, 0.040245071},
      {19.73889, 19.75614, 0.017253893},
      {19.74884, 19.76288, 0.014041773},
      {19.75879, 19.76844, 0.009649179},
  }});
  f.sectors.push_back({"EDU", "Educational services", "ARIMA(0,1,0)(0,0,1)[4] with drift", "Seasonal MA with drift", -274.44, {
      {19.26395, 19.25966, -4.288729e-03},
      {19.27208, 19.22275, -4.933148e-02},
      {19.28197, 19.23210, -4.986863e-02},
      {19.28835, 19.26050, -2.784316e-02},
      {19.29865, 19.28347, -1.518380e-02},
      {19.30895, 19.30877, -1.842671e-04},
      {19.31926, 19.31912, -1.400356e-04},
      {19.32956, 19.32965, 8.569209e-05},
      {19.33987, 19.32884, -1.102637e-02},
      {19.35017, 19.34350, -6.666293e-03},
      {19.36047, 19.36972, 9.241764e-03},
      {19.37078, 19.38049, 9.715201e-03},
      {19.38108, 19.40759, 2.650522e-02},
      {19.39139, 19.40968, 1.829096e-02},
  }});
  f.sectors.push_back({"HEA", "Health care", "ARIMA(0,1,0) with drift", "Random walk with drift", -296.26, {
      {21.11722, 21.12801, 0.010791924},
      {21.12719, 21.06098, -0.066206104},
      {21.13715, 21.15254, 0.015388224},
      {21.14712, 21.16283, 0.015711709},
      {21.15709, 21.15364, -0.003451637},
      {21.16706, 21.16252, -0.004535641},
      {21.17702, 21.18911, 0.012087130},
      {21.18699, 21.20503, 0.018036631},
      {21.19696, 21.21553, 0.018577366},
      {21.20692, 21.23279, 0.025864056},
      {21.21689, 21.25946, 0.042565516},
      {21.22686, 21.26923, 0.042375542},
      {21.23682, 21.29676, 0.059940730},
      {21.24679, 21.31633, 0.069542914},
  }});
  f.sectors.push_back({"ACCF", "Accommodation and food services", "ARIMA(0,1,0) with drift", "Random walk with drift", -267.37, {
      {19.97820, 19.94579, -0.0324045231},
      {19.99339, 19.37329, -0.6200994973},
      {20.00857, 19.72411, -0.2844666523},
      {20.02376, 19.78110, -0.2426571383},
      {20.03895, 19.81858, -0.2203678834},
      {20.05413, 20.02000, -0.0341382719},
      {20.06932, 20.12043, 0.0511123425},
      {20.08451, 20.11314, 0.0286351254},
      {20.09970, 20.05289, -0.0468089027},
      {20.11488, 20.08619, -0.0286951382},
      {20.13007, 20.12922, -0.0008478663},
      {20.14526, 20.12996, -0.0152985268},
      {20.16044, 20.16836, 0.0079128986},
      {20.17563, 20.18743, 0.0117986740},
  }});
  f.sectors.push_back({"GOV", "Government", "ARIMA(1,2,1)", "AR and MA with double differencing", -300.09, {
      {21.46856, 21.47727, 0.008710057},
      {21.47835, 21.45001, -0.028344818},
      {21.48766, 21.47337, -0.014292772},
      {21.49680, 21.47393, -0.022866274},
      {21.50587, 21.48354, -0.022334524},
      {21.51491, 21.49191, -0.023006661},
      {21.52395, 21.50901, -0.014939644},
      {21.53298, 21.50878, -0.024204846},
      {21.54201, 21.51425, -0.027765223},
      {21.55104, 21.51842, -0.032618243},
      {21.56007, 21.52843, -0.031643781},
      {21.56910, 21.54292, -0.026176581},
      {21.57813, 21.55948, -0.018651811},
      {21.58716, 21.57223, -0.014925834},
  }});

  const double aggregate[] = {
      -0.02743556,
      -1.42218146,
      -0.31169539,
      0.23587149,
      -0.04904149,
      0.69007384,
      0.75464512,
      0.59913413,
      0.61505964,
      0.64900868,
      0.75491565,
      0.71369990,
      0.72154733,
      0.61180581,
  };
  for (std::size_t i = 0; i < std::size(aggregate); ++i) {
    f.aggregate.push_back({f.window_start + static_cast<std::int64_t>(i), aggregate[i]});
  }

  f.turning_points.push_back({"FARM", Quarter(2020, 3), 0.0159, Resilience::HighlyResilient});
  f.turning_points.push_back({"FIN", Quarter(2020, 1), 0.0468, Resilience::HighlyResilient});
  f.turning_points.push_back({"HEA", Quarter(2020, 3), 0.015, Resilience::HighlyResilient});
  f.turning_points.push_back({"RE", Quarter(2020, 4), 0.011, Resilience::HighlyResilient});
  f.turning_points.push_back({"RET", Quarter(2020, 3), 0.0032, Resilience::HighlyResilient});
  f.turning_points.push_back({"UTL", Quarter(2020, 1), 0.0295, Resilience::HighlyResilient});
  f.turning_points.push_back({"TRANS", Quarter(2021, 2), 0.0083, Resilience::ModeratelyResilient});
  f.turning_points.push_back({"ACCF", Quarter(2021, 3), 0.0511, Resilience::LessResilient});
  f.turning_points.push_back({"EDU", Quarter(2021, 4), 8.5e-5, Resilience::LessResilient});
  f.turning_points.push_back({"MAN", Quarter(2021, 4), 0.0013, Resilience::LessResilient});
  f.turning_points.push_back({"WHO", Quarter(2021, 4), 0.0015, Resilience::LessResilient});
  f.turning_points.push_back({"CONS", Quarter(2023, 2), -0.025, Resilience::MinimallyResilient});
  f.turning_points.push_back({"GOV", Quarter(2023, 2), -0.0149, Resilience::MinimallyResilient});

  f.variance.push_back({"FARM", 0.05378, 53.26});
  f.variance.push_back({"UTL", 0.00094, 0.93});
  f.variance.push_back({"CONS", 0.00055, 0.55});
  f.variance.push_back({"MAN", 0.00099, 0.98});
  f.variance.push_back({"WHO", 0.00195, 1.93});
  f.variance.push_back({"RET", 0.00179, 1.77});
  f.variance.push_back({"TRANS", 0.00212, 2.10});
  f.variance.push_back({"FIN", 0.00041, 0.41});
  f.variance.push_back({"RE", 0.00319, 3.16});
  f.variance.push_back({"EDU", 0.00051, 0.50});
  f.variance.push_back({"HEA", 0.00106, 1.05});
  f.variance.push_back({"ACCF", 0.03359, 33.26});
  f.variance.push_back({"GOV", 0.00011, 0.11});

  f.summaries.push_back({"FARM", 17.82, 18.29, 18.72});
  f.summaries.push_back({"UTL", 18.06, 18.38, 18.72});
  f.summaries.push_back({"CONS", 19.99, 20.33, 20.69});
  f.summaries.push_back({"MAN", 20.56, 20.80, 21.06});
  f.summaries.push_back({"WHO", 19.88, 20.14, 20.45});
  f.summaries.push_back({"RET", 20.08, 20.33, 20.62});
  f.summaries.push_back({"TRANS", 19.51, 19.91, 20.33});
  f.summaries.push_back({"FIN", 20.29, 20.52, 20.84});
  f.summaries.push_back({"RE", 18.76, 19.41, 19.81});
  f.summaries.push_back({"EDU", 18.84, 19.12, 19.41});
  f.summaries.push_back({"HEA", 20.72, 20.98, 21.32});
  f.summaries.push_back({"ACCF", 19.37, 19.76, 20.19});
  f.summaries.push_back({"GOV", 21.23, 21.37, 21.57});
  // clang-format on
  return f;
}

}  // namespace

const GoldenFixture& load_fixture() {
  static const GoldenFixture fixture = build_fixture();
  return fixture;
}

}  // namespace shockcast
