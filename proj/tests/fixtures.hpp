// Reference values for the unit and acceptance suites, computed offline
// with mpmath at 50-digit precision and rounded to nearest double.
// Regenerate with: python3 make_fixtures.py  (writes this file)
#pragma once

namespace evtper::fixtures {

struct PointFix {
  double x;
  double value;
};

struct PolygammaFix {
  int order;
  double x;
  double value;
};

inline constexpr PointFix kQFunction[] = {
    {-8.0, 0.9999999999999993},
    {-6.0, 0.9999999990134123},
    {-4.0, 0.9999683287581669},
    {-2.0, 0.9772498680518208},
    {-1.0, 0.8413447460685429},
    {-0.5, 0.6914624612740131},
    {0.0, 0.5},
    {0.5, 0.3085375387259869},
    {1.0, 0.15865525393145705},
    {1.7, 0.04456546275854304},
    {2.0, 0.02275013194817921},
    {2.8284271, 0.00233886767134115},
    {4.0, 3.1671241833119924e-05},
    {6.0, 9.86587645037698e-10},
    {8.0, 6.220960574271784e-16},
};

inline constexpr PointFix kQFunctionTail[] = {
    {10.0, 7.619853024160525e-24},
    {15.0, 3.670966199312751e-51},
    {20.0, 2.7536241186062337e-89},
    {30.0, 4.906713927148187e-198},
    {37.0, 5.725571222524577e-300},
};

inline constexpr double kErf125 = 0.9229001282564583;
inline constexpr double kErfInvP1024 = 2.190099968353768;  // erf^-1(1 - 2/1024)

// (p, erf^-1(p)) pairs across both branches.
inline constexpr PointFix kErfInv[] = {
    {0.1, 0.08885599049425769},
    {0.5, 0.4769362762044699},
    {0.9, 1.163087153676674},
    {0.99, 1.8213863677184496},
    {0.9999, 2.7510639057120607},
    {0.999969482421875, 2.948330743167557},
    {-0.3, -0.2724627147267544},
    {-0.999, -2.3267537655135246},
};

inline constexpr PointFix kGamma[] = {
    {0.5, 1.772453850905516},
    {1.02, 0.9888442032639133},
    {1.5, 0.886226925452758},
    {2.5, 1.329340388179137},
    {3.25, 2.5492569667185294},
    {7.5, 1871.2543057977884},
    {12.0, 39916800.0},
    {20.25, 2.5604013332847648e+17},
    {34.5, 5.044620868349451e+37},
    {50.0, 6.082818640342675e+62},
};

inline constexpr PointFix kLnGamma[] = {
    {0.5, 0.5723649429247001},
    {1.02, -0.011218489329770086},
    {2.5, 0.2846828704729192},
    {7.5, 7.534364236758733},
    {20.25, 40.08411059791735},
    {50.0, 144.5657439463449},
};

inline constexpr PolygammaFix kPolygamma[] = {
    {0, 0.5, -1.9635100260214235},
    {0, 1.0, -0.5772156649015329},
    {0, 2.2, 0.544293436741145},
    {0, 7.3, 1.9178203356379862},
    {0, 15.0, 2.6743466616607936},
    {0, 50.0, 3.901989673427892},
    {1, 0.5, 4.934802200544679},
    {1, 1.0, 1.6449340668482264},
    {1, 2.2, 0.5729327609793347},
    {1, 7.3, 0.14679576813142708},
    {1, 15.0, 0.0689382278476838},
    {1, 50.0, 0.020201333226697125},
    {2, 0.5, -16.82879664423432},
    {2, 1.0, -2.4041138063191885},
    {2, 2.2, -0.32062870702852564},
    {2, 7.3, -0.02151081444162025},
    {2, 15.0, -0.004750602716551555},
    {2, 50.0, -0.0004080799893375969},
    {3, 0.5, 97.40909103400244},
    {3, 1.0, 6.493939402266829},
    {3, 2.2, 0.35147634620726165},
    {3, 7.3, 0.006293158713198489},
    {3, 15.0, 0.0006544797782827373},
    {3, 50.0, 1.6486398720682052e-05},
    {5, 0.5, 7691.113548602436},
    {5, 1.0, 122.0811674381339},
    {5, 2.2, 1.2019212161264246},
    {5, 7.3, 0.0016075721226681498},
    {5, 15.0, 3.722215094961951e-05},
    {5, 50.0, 8.071677135254362e-08},
    {8, 0.5, -20644899.96176004},
    {8, 1.0, -40400.97839874763},
    {8, 2.2, -34.66144340117113},
    {8, 7.3, -0.0010354913053092017},
    {8, 15.0, -2.542957742294163e-06},
    {8, 50.0, -1.3965535085443278e-10},
    {12, 0.5, -3923983571677.6094},
    {12, 1.0, -479060379.8898314},
    {12, 2.2, -17071.102177935492},
    {12, 7.3, -0.003575683523601076},
    {12, 15.0, -4.482203061279089e-07},
    {12, 50.0, -1.8396812704116732e-13},
    {16, 0.5, -2.742391937439321e+18},
    {16, 1.0, -20922949679481.51},
    {16, 2.2, -31636222.43060082},
    {16, 7.3, -0.049917846513991906},
    {16, 15.0, -3.248336368852541e-07},
    {16, 50.0, -1.0018695347069275e-15},
};

inline constexpr double kQSqrt8 = 0.002338867490523633;  // Q(sqrt(8)) = erfc(2)/2
inline constexpr double kPerBpskN10Snr4 = 0.023144040404677498;  // 1-(1-Q(sqrt(8)))^10
inline constexpr double kAvgPerFsk256Rayleigh100 = 0.10260494391366251;  // 1-exp(-2ln128/100)*gamma(1.02)
inline constexpr double kGamma102 = 0.9888442032639133;

}  // namespace evtper::fixtures
