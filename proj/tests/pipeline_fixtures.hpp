// Generated by tests/oracle/gen_pipeline_fixtures.py -- do not edit by hand.
#pragma once

namespace pipeline_fixtures {

// Ranking pipeline, mean imputation, default directions.
inline constexpr double fi_median = 0.4559657570893526;
inline constexpr double fi_std = 0.2946164716953553;
inline constexpr double fi_w = 0.3216307345217861;
inline constexpr double mean_w = 0.34748857952729806;
inline constexpr double std_w = 0.1252069146258426;
inline constexpr const char* top3[] = {"NL", "DE", "FR"};
inline constexpr double w_by_entity[] = {
    0.4646523110751881,
    0.2574301348426588,
    0.35716057170843174,
    0.4435015153119162,
    0.5393700456098063,
    0.10192528592000068,
    0.31075658683047624,
    0.2538968478743674,
    0.4142027941818439,
    0.5123772341744197,
    0.35319220870764695,
    0.46255716494307814,
    0.1520506507969583,
    0.24422720535244688,
    0.31563722197619726,
    0.4572026241832312,
    0.292917364707157,
    0.129573101044989,
    0.5475559425381737,
    0.5076067501880976,
    0.31505355586731215,
    0.29854535272517924,
    0.12183957862683686,
    0.425134901905115,
    0.27996179484526484,
    0.3216307345217861,
    0.42826307145160747,
    0.4214576748541595,
};


// Regression x12 ~ x1..x11, mean imputation, n = 28.
inline constexpr double mean_coefficients[] = {
    11.335366256299654,
    0.006543157006456897,
    -0.028669735273388747,
    0.21379031706341126,
    0.3101141784116552,
    -0.30712007954117077,
    -0.13221426303129827,
    -0.023509582230433677,
    -0.05730084628050563,
    0.03500999687540216,
    0.6660523934127314,
    0.0029641586286738952,
};

inline constexpr double mean_std_errors[] = {
    22.13637787569577,
    0.01766880748418126,
    0.026823052043682002,
    0.49992897226429156,
    0.1974318600011403,
    0.19011885053432037,
    0.28595611342025745,
    0.13402550817016357,
    0.06720284296627695,
    0.12175366683619603,
    0.5565985763154666,
    0.003204278959974747,
};

inline constexpr double mean_standardized[] = {
    0.09106676357596268,
    -0.44363371395160656,
    0.1823174073181676,
    0.5484363259473355,
    -0.5819946684326964,
    -0.13565157946918383,
    -0.041042321713210546,
    -0.3140217942197329,
    0.08368173088480722,
    0.47673001666522763,
    0.19290786678244173,
};

inline constexpr double mean_standardized_se[] = {
    0.2459120440245139,
    0.41505825164354054,
    0.426332470611508,
    0.3491578633345859,
    0.3602765326996287,
    0.2933904221448815,
    0.2339777019506361,
    0.3682870096129238,
    0.29101852304315573,
    0.3983879514389601,
    0.2085349322283499,
};

inline constexpr double mean_t[] = {
    0.5120696041580095,
    0.3703225026541792,
    -1.0688468719629434,
    0.42764138292507126,
    1.5707402969807611,
    -1.61541098464473,
    -0.46235858170651734,
    -0.1754112523161268,
    -0.8526550924230951,
    0.2875477822159035,
    1.1966476770778318,
    0.9250626008845547,
};

inline constexpr double mean_p[] = {
    0.6155976140129197,
    0.7159988374578168,
    0.3009998290746246,
    0.6746122510188779,
    0.1358062555086777,
    0.12576607422856978,
    0.6500494429302698,
    0.8629571993012142,
    0.4064337537812267,
    0.7773839162968973,
    0.24887511442480656,
    0.36867605168113804,
};

inline constexpr double mean_r2 = 0.5278661814605037;
inline constexpr double mean_adjusted_r2 = 0.20327418121460003;
inline constexpr double mean_f = 1.6262451972340786;
inline constexpr double mean_p_f = 0.18275489997425795;
inline constexpr double mean_residual_std_error = 7.497039858412623;
inline constexpr double mean_durbin_watson = 1.7777501160140161;
inline constexpr double mean_serial_correlation = -0.08732545450430648;

// Regression x12 ~ x1..x11, listwise deletion, n = 20.
inline constexpr double listwise_coefficients[] = {
    52.69190552607946,
    0.020054729079221605,
    0.004814761716257299,
    0.963037118510463,
    0.22540245675346843,
    -0.046892000684619566,
    -0.8618280903399664,
    -0.09494242075252882,
    -0.003761727684347556,
    -0.2032374966698685,
    0.20226555349581848,
    0.0013136913166951773,
};

inline constexpr int listwise_n = 20;
inline constexpr double listwise_r2 = 0.5694420964423678;
inline constexpr double listwise_f = 0.9618676212457582;
inline constexpr double listwise_durbin_watson = 1.2159779076930353;
inline constexpr double listwise_serial_correlation = 0.2923800616347521;

// Simple regression x12 ~ x10, mean imputation.
inline constexpr double simple_slope = 0.7399808878791433;
inline constexpr double simple_intercept = -0.19827731212519747;
inline constexpr double simple_residual_std_error = 7.260038029502776;

// Column means substituted by mean imputation (columns with gaps).
struct ImputedMean { const char* variable; int available; double mean; };
inline constexpr ImputedMean imputed_means[] = {
    {"x1", 27, 467.6296296296296},
    {"x4", 27, 35.28148148148148},
    {"x5", 25, 51.6},
    {"x8", 27, 58.48148148148148},
    {"x9", 27, 84.81481481481481},
    {"x12", 23, 6.139130434782609},
};

}  // namespace pipeline_fixtures
