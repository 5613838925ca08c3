#pragma once

#include <array>
#include <string_view>

// Printed reference values, transcribed verbatim (including malformed cells).
// Generated from the published tables; keys are fixture stems.

namespace citest::tables {

struct ExpectedCell {
    std::string_view fixture;
    std::string_view quantity;
    std::string_view printed;
};

inline constexpr std::array<ExpectedCell, 280> kIndicesExpected{{
    {"leydesdorff", "h", "79"},
    {"glanzel", "h", "61"},
    {"moed", "h", "49"},
    {"van_raan", "h", "48"},
    {"rousseau", "h", "43"},
    {"schubert", "h", "42"},
    {"martin", "h", "38"},
    {"leydesdorff", "n_cit_h", "17360"},
    {"glanzel", "n_cit_h", "8049"},
    {"moed", "n_cit_h", "6351"},
    {"van_raan", "n_cit_h", "6833"},
    {"rousseau", "n_cit_h", "5203"},
    {"schubert", "n_cit_h", "6359"},
    {"martin", "n_cit_h", "7048"},
    {"leydesdorff", "h_na", "85.461"},
    {"glanzel", "h_na", "58.623"},
    {"moed", "h_na", "47.133"},
    {"van_raan", "h_na", "49.260"},
    {"rousseau", "h_na", "48.499"},
    {"schubert", "h_na", "47.074"},
    {"martin", "h_na", "47.108"},
    {"leydesdorff", "h_na_ratio", "1.0818"},
    {"glanzel", "h_na_ratio", "0.9610"},
    {"moed", "h_na_ratio", "0.9619"},
    {"van_raan", "h_na_ratio", "1.0263"},
    {"rousseau", "h_na_ratio", "1.1279"},
    {"schubert", "h_na_ratio", "1.1208"},
    {"martin", "h_na_ratio", "1.2397"},
    {"leydesdorff", "q", "4.563"},
    {"glanzel", "q", "3.326"},
    {"moed", "q", "4.290"},
    {"van_raan", "q", "4.931"},
    {"rousseau", "q", "4.628"},
    {"schubert", "q", "6.210"},
    {"martin", "q", "8.762"},
    {"leydesdorff", "e", "105.447"},
    {"glanzel", "e", "65.788"},
    {"moed", "e", "62.849"},
    {"van_raan", "e", "67.298"},
    {"rousseau", "e", "57.914"},
    {"schubert", "e", "67.786"},
    {"martin", "e", "74.860"},
    {"leydesdorff", "I", "(19558.16; 23256.68)"},
    {"glanzel", "I", "(11484.07; 14060.34)"},
    {"moed", "I", "(7136.42; 9380.86)"},
    {"van_raan", "I", "(6774.63; 9086.55)"},
    {"rousseau", "I", "(5359.12; 7382.63)"},
    {"schubert", "I", "(4983.55; 7196.69)"},
    {"martin", "I", "(3854.27; 6168.88)"},
    {"leydesdorff", "I_mean", "21407.42"},
    {"glanzel", "I_mean", "12772.20"},
    {"moed", "I_mean", "8258.64"},
    {"van_raan", "I_mean", "7930.59"},
    {"rousseau", "I_mean", "6370.88"},
    {"schubert", "I_mean", "6090.12"},
    {"martin", "I_mean", "5011.58"},
    {"leydesdorff", "delta_1", "-0.144"},
    {"glanzel", "delta_1", "0.086"},
    {"moed", "delta_1", "0.086"},
    {"van_raan", "delta_1", "0.045"},
    {"rousseau", "delta_1", "-0.2088"},
    {"schubert", "delta_1", "-0.197"},
    {"martin", "delta_1", "-0.340"},
    {"leydesdorff", "I_q", "(21882.74; 26020.85)"},
    {"glanzel", "I_q", "(12770.53; 15635.41)"},
    {"moed", "I_q", "(8440.72; 11095.38)"},
    {"van_raan", "I_q", "(8238.03; 11049.35)"},
    {"rousseau", "I_q", "(6574.78; 9057.30)"},
    {"schubert", "I_q", "(6566.21; 9482.18)"},
    {"martin", "I_q", "(5836.61; 9341.68)"},
    {"leydesdorff", "I_q_mean", "23951.80"},
    {"glanzel", "I_q_mean", "14202.97"},
    {"moed", "I_q_mean", "9768.05"},
    {"van_raan", "I_q_mean", "9643.69"},
    {"rousseau", "I_q_mean", "7816.04"},
    {"schubert", "I_q_mean", "8024.20"},
    {"martin", "I_q_mean", "7589.15"},
    {"leydesdorff", "delta_2", "-0.070"},
    {"glanzel", "delta_2", "0.207"},
    {"moed", "delta_2", "0.284"},
    {"van_raan", "delta_2", "0.161"},
    {"rousseau", "delta_2", "-0.029"},
    {"schubert", "delta_2", "0.058"},
    {"martin", "delta_2", "-0.001"},
    {"leydesdorff", "r", "4"},
    {"glanzel", "r", "3"},
    {"moed", "r", "4"},
    {"van_raan", "r", "4"},
    {"rousseau", "r", "4"},
    {"schubert", "r", "6"},
    {"martin", "r", "8"},
    {"leydesdorff", "I_r", "(21827.50; 25412.56)"},
    {"glanzel", "I_r", "(12763.04; 15343.37)"},
    {"moed", "I_r", "(8425.60; 10887.61)"},
    {"van_raan", "I_r", "(8180.13; 10401.98)"},
    {"rousseau", "I_r", "(6555.30; 8642.69)"},
    {"schubert", "I_r", "(6546.62; 9354.83)"},
    {"martin", "I_r", "(5777.18; 8877.86)"},
    {"leydesdorff", "I_r_mean", "23620.03"},
    {"glanzel", "I_r_mean", "14053.21"},
    {"moed", "I_r_mean", "9656.61"},
    {"van_raan", "I_r_mean", "9291.06"},
    {"rousseau", "I_r_mean", "7599.00"},
    {"schubert", "I_r_mean", "7950.73"},
    {"martin", "I_r_mean", "7327.52"},
    {"leydesdorff", "delta_3", "-0.055"},
    {"glanzel", "delta_3", "0.194"},
    {"moed", "delta_3", "0.270"},
    {"van_raan", "delta_3", "0.118"},
    {"rousseau", "delta_3", "-0.057"},
    {"schubert", "delta_3", "0.048"},
    {"martin", "delta_3", "-0.036"},
    {"leydesdorff", "q_prime", "2.782"},
    {"glanzel", "q_prime", "2.163"},
    {"moed", "q_prime", "3.16785"},
    {"van_raan", "q_prime", "3.6059"},
    {"rousseau", "q_prime", "4.35533"},
    {"schubert", "q_prime", "4.30102"},
    {"martin", "q_prime", "5.26177"},
    {"leydesdorff", "I_q_prime", "(21706.44; 24122.62)"},
    {"glanzel", "I_q_prime", "(12775.67; 14572.12)"},
    {"moed", "I_q_prime", "(8402.02; 10280.61)"},
    {"van_raan", "I_q_prime", "(8167.04; 10121.24)"},
    {"rousseau", "I_q_prime", "(6566.59; 8876.24)"},
    {"schubert", "I_q_prime", "(6734.56; 8683.24)"},
    {"martin", "I_q_prime", "(5544.36; 7333.75)"},
    {"leydesdorff", "I_q_prime_mean", "22914.53"},
    {"glanzel", "I_q_prime_mean", "13673.90"},
    {"moed", "I_q_prime_mean", "9341.315"},
    {"van_raan", "I_q_prime_mean", "9144.14"},
    {"rousseau", "I_q_prime_mean", "7721.42"},
    {"schubert", "I_q_prime_mean", "7708.9"},
    {"martin", "I_q_prime_mean", "6439.06"},
    {"leydesdorff", "delta_4", "-0.084"},
    {"glanzel", "delta_4", "0.162"},
    {"moed", "delta_4", "0.228"},
    {"van_raan", "delta_4", "0.101"},
    {"rousseau", "delta_4", "-0.041"},
    {"schubert", "delta_4", "0.016"},
    {"martin", "delta_4", "-0.153"},
    {"narin", "h", "38"},
    {"garfield", "h", "37"},
    {"braun", "h", "37"},
    {"small", "h", "34"},
    {"egghe", "h", "30"},
    {"ingwersen", "h", "27"},
    {"white", "h", "19"},
    {"narin", "n_cit_h", "6823"},
    {"garfield", "n_cit_h", "10509"},
    {"braun", "n_cit_h", "3566"},
    {"small", "n_cit_h", "7471"},
    {"egghe", "n_cit_h", "3995"},
    {"ingwersen", "n_cit_h", "2952"},
    {"white", "n_cit_h", "2332"},
    {"narin", "h_na", "45.887"},
    {"garfield", "h_na", "57.994"},
    {"braun", "h_na", "40.731"},
    {"small", "h_na", "47.402"},
    {"egghe", "h_na", "40.587"},
    {"ingwersen", "h_na", "32.454"},
    {"white", "h_na", "26.471"},
    {"narin", "h_na_ratio", "1.208"},
    {"garfield", "h_na_ratio", "1.568"},
    {"braun", "h_na_ratio", "1.101"},
    {"small", "h_na_ratio", "1.394"},
    {"egghe", "h_na_ratio", "1.353"},
    {"ingwersen", "h_na_ratio", "1.211"},
    {"white", "h_na_ratio", "1.393"},
    {"narin", "q", "8.450"},
    {"garfield", "q", "14.353"},
    {"braun", "q", "4.210"},
    {"small", "q", "11.926"},
    {"egghe", "q", "7.878"},
    {"ingwersen", "q", "7.099"},
    {"white", "q", "11.920"},
    {"narin", "e", "73.342"},
    {"garfield", "e", "95.603"},
    {"braun", "e", "46.872"},
    {"small", "e", "79.467"},
    {"egghe", "e", "55.633"},
    {"ingwersen", "e", "47.149"},
    {"white", "e", "44.396"},
    {"narin", "I", "(3870.2; 6148.67)"},
    {"garfield", "I", "(3385.36; 6200.06)"},
    {"braun", "I", "(3882.90; 5566.85)"},
    {"small", "I", "(2859.02; 5234.89)"},
    {"egghe", "I", "(4015.81; 2270.45)"},
    {"ingwersen", "I", "(1800.88; 3304.06)"},
    {"white", "I", "(669.45; 1974.80)"},
    {"narin", "I_mean", "5009.47"},
    {"garfield", "I_mean", "4792.71"},
    {"braun", "I_mean", "4724.88"},
    {"small", "I_mean", "4046.96"},
    {"egghe", "I_mean", "3143.13"},
    {"ingwersen", "I_mean", "2552.47"},
    {"white", "I_mean", "1322.13"},
    {"narin", "delta_1", "-0.305"},
    {"garfield", "delta_1", "-0.584"},
    {"braun", "delta_1", "-0.168"},
    {"small", "delta_1", "-0.474"},
    {"egghe", "delta_1", "-0.443"},
    {"ingwersen", "delta_1", "-0.292"},
    {"white", "delta_1", "-0.449"},
    {"narin", "I_q", "(5782.90; 9187.24)"},
    {"garfield", "I_q", "(6521.28; 11943.29)"},
    {"braun", "I_q", "(4818.90; 6908.78)"},
    {"small", "I_q", "(5216.46; 9551.40)"},
    {"egghe", "I_q", "(3619.47; 6401.84)"},
    {"ingwersen", "I_q", "(2872.37; 5269.91)"},
    {"white", "I_q", "(1751.52; 5266.87)"},
    {"narin", "I_q_mean", "7485.07"},
    {"garfield", "I_q_mean", "9232.29"},
    {"braun", "I_q_mean", "5863.84"},
    {"small", "I_q_mean", "7383.93"},
    {"egghe", "I_q_mean", "5010.66"},
    {"ingwersen", "I_q_mean", "4071.14"},
    {"white", "I_q_mean", "3509.19"},
    {"narin", "delta_2", "0.038"},
    {"garfield", "delta_2", "-0.198"},
    {"braun", "delta_2", "0.032"},
    {"small", "delta_2", "-0.040"},
    {"egghe", "delta_2", "-0.112"},
    {"ingwersen", "delta_2", "0.129"},
    {"white", "delta_2", "0.463"},
    {"narin", "r", "8"},
    {"garfield", "r", "13"},
    {"braun", "r", "4"},
    {"small", "r", "11"},
    {"egghe", "r", "7"},
    {"ingwersen", "r", "6"},
    {"white", "r", "11"},
    {"narin", "I_r", "(5750.33; 8911.26)"},
    {"garfield", "I_r", "(6389.78; 11045.32)"},
    {"braun", "I_r", "(4814.88; 6779.47)"},
    {"small", "I_r", "(5146.50; 8985.23)"},
    {"egghe", "I_r", "(3581.77; 5940.77)"},
    {"ingwersen", "I_r", "(2839.87; 4737.73)"},
    {"white", "I_r", "(1743.58; 4797.44)"},
    {"narin", "I_r_mean", "7330.80"},
    {"garfield", "I_r_mean", "8717.55"},
    {"braun", "I_r_mean", "5797.18"},
    {"small", "I_r_mean", "7065.87"},
    {"egghe", "I_r_mean", "4761.27"},
    {"ingwersen", "I_r_mean", "3788.80"},
    {"white", "I_r_mean", "3270.51"},
    {"narin", "delta_3", "0.017"},
    {"garfield", "delta_3", "-0.243"},
    {"braun", "delta_3", "0.021"},
    {"small", "delta_3", "-0.082"},
    {"egghe", "delta_3", "-0.156"},
    {"ingwersen", "delta_3", "0.051"},
    {"white", "delta_3", "0.363"},
    {"narin", "q_prime", "4.725"},
    {"garfield", "q_prime", "7.676"},
    {"braun", "q_prime", "2.605"},
    {"small", "q_prime", "6.463"},
    {"egghe", "q_prime", "4.439"},
    {"ingwersen", "q_prime", "4.050"},
    {"white", "q_prime", "6.460"},
    {"narin", "I_q_prime", "(5470.41; 7080.98)"},
    {"garfield", "I_q_prime", "(5780.31; 7975.14)"},
    {"braun", "I_q_prime", "(4788.34; 5985.49)"},
    {"small", "I_q_prime", "(4730.77; 6554.26)"},
    {"egghe", "I_q_prime", "(3438.51; 4734.49)"},
    {"ingwersen", "I_q_prime", "(2758.07; 3891.98)"},
    {"white", "I_q_prime", "(1620.42; 2912.08)"},
    {"narin", "I_q_prime_mean", "6275.70"},
    {"garfield", "I_q_prime_mean", "6877.73"},
    {"braun", "I_q_prime_mean", "5386.92"},
    {"small", "I_q_prime_mean", "5642.52"},
    {"egghe", "I_q_prime_mean", "4086.5"},
    {"ingwersen", "I_q_prime_mean", "3325.03"},
    {"white", "I_q_prime_mean", "2266.25"},
    {"narin", "delta_4", "-0.129"},
    {"garfield", "delta_4", "-0.403"},
    {"braun", "delta_4", "-0.052"},
    {"small", "delta_4", "-0.267"},
    {"egghe", "delta_4", "-0.275"},
    {"ingwersen", "delta_4", "-0.078"},
    {"white", "delta_4", "-0.055"},
}};

inline constexpr std::array<ExpectedCell, 224> kEstimatesExpected{{
    {"leydesdorff", "d", "3"},
    {"glanzel", "d", "2"},
    {"moed", "d", "5"},
    {"van_raan", "d", "14"},
    {"rousseau", "d", "2"},
    {"schubert", "d", "9"},
    {"martin", "d", "20"},
    {"leydesdorff", "h_d", "78"},
    {"glanzel", "h_d", "59"},
    {"moed", "h_d", "44"},
    {"van_raan", "h_d", "39"},
    {"rousseau", "h_d", "42"},
    {"schubert", "h_d", "36"},
    {"martin", "h_d", "23"},
    {"leydesdorff", "n_h_d", "12284"},
    {"glanzel", "n_h_d", "7066"},
    {"moed", "n_h_d", "3998"},
    {"van_raan", "n_h_d", "3049"},
    {"rousseau", "n_h_d", "3711"},
    {"schubert", "n_h_d", "2592"},
    {"martin", "n_h_d", "1093"},
    {"leydesdorff", "e_d", "78.740"},
    {"glanzel", "e_d", "59.875"},
    {"moed", "e_d", "45.409"},
    {"van_raan", "e_d", "39.090"},
    {"rousseau", "e_d", "44.125"},
    {"schubert", "e_d", "36.000"},
    {"martin", "e_d", "23.785"},
    {"leydesdorff", "q_d", "3.038"},
    {"glanzel", "q_d", "3.060"},
    {"moed", "q_d", "3.130"},
    {"van_raan", "q_d", "3.009"},
    {"rousseau", "q_d", "3.160"},
    {"schubert", "q_d", "3.000"},
    {"martin", "q_d", "3.132"},
    {"leydesdorff", "J_d", "(24405.9, 27623.3)"},
    {"glanzel", "J_d", "(11714, 14150.1)"},
    {"moed", "J_d", "(8191.0, 10018.6)"},
    {"van_raan", "J_d", "(8747.6, 10351.1)"},
    {"rousseau", "J_d", "(6739.4, 10003.4)"},
    {"schubert", "J_d", "(7608.4, 9087.5)"},
    {"martin", "J_d", "(7446.9, 8422.4)"},
    {"leydesdorff", "J_d_mean", "26015.9"},
    {"glanzel", "J_d_mean", "12932.1"},
    {"moed", "J_d_mean", "9104.8"},
    {"van_raan", "J_d_mean", "9549.4"},
    {"rousseau", "J_d_mean", "8371.4"},
    {"schubert", "J_d_mean", "8348.0"},
    {"martin", "J_d_mean", "7944.7"},
    {"leydesdorff", "h_d1", "78"},
    {"glanzel", "h_d1", "59"},
    {"moed", "h_d1", "44"},
    {"van_raan", "h_d1", "39"},
    {"rousseau", "h_d1", "42"},
    {"schubert", "h_d1", "36"},
    {"martin", "h_d1", "23"},
    {"leydesdorff", "n_h_d1", "11882"},
    {"glanzel", "n_h_d1", "6708"},
    {"moed", "n_h_d1", "3794"},
    {"van_raan", "n_h_d1", "2938"},
    {"rousseau", "n_h_d1", "3275"},
    {"schubert", "n_h_d1", "2477"},
    {"martin", "n_h_d1", "1048"},
    {"leydesdorff", "e_d1", "76.151"},
    {"glanzel", "e_d1", "56.807"},
    {"moed", "e_d1", "42.942"},
    {"van_raan", "e_d1", "37.643"},
    {"rousseau", "e_d1", "38.8716"},
    {"schubert", "e_d1", "34.366"},
    {"martin", "e_d1", "22.782"},
    {"leydesdorff", "q_d1", "2.906"},
    {"glanzel", "q_d1", "2.85406"},
    {"moed", "q_d1", "2.919"},
    {"van_raan", "q_d1", "2.863"},
    {"rousseau", "q_d1", "2.71315"},
    {"schubert", "q_d1", "2.822"},
    {"martin", "q_d1", "2.962"},
    {"leydesdorff", "J_d1", "(24904.3, 28084.2)"},
    {"glanzel", "J_d1", "(12150.5; 14545.6)"},
    {"moed", "J_d1", "(8453.9; 10249.6)"},
    {"van_raan", "J_d1", "(8592.4; 10176.8)"},
    {"rousseau", "J_d1", "(7231.8, 8923.9)"},
    {"schubert", "J_d1", "(7769.2; 9226.9)"},
    {"martin", "J_d1", "(7540.8; 8482.8)"},
    {"leydesdorff", "J_d1_mean", "26496.3"},
    {"glanzel", "J_d1_mean", "13348.0"},
    {"moed", "J_d1_mean", "9351.8"},
    {"van_raan", "J_d1_mean", "9384.6"},
    {"rousseau", "J_d1_mean", "8077.9"},
    {"schubert", "J_d1_mean", "8498.0"},
    {"martin", "J_d1_mean", "8011.8"},
    {"leydesdorff", "A", "26255.1"},
    {"glanzel", "A", "12900.6"},
    {"moed", "A", "9228.3"},
    {"van_raan", "A", "9467.0"},
    {"rousseau", "A", "8224.7"},
    {"schubert", "A", "8423"},
    {"martin", "A", "7978.2"},
    {"leydesdorff", "B", "25846.0"},
    {"glanzel", "B", "12998.8"},
    {"moed", "B", "9637.9"},
    {"van_raan", "B", "9056.2"},
    {"rousseau", "B", "8620.6"},
    {"schubert", "B", "7688.8"},
    {"martin", "B", "7964.4"},
    {"leydesdorff", "Delta_B", "-841"},
    {"glanzel", "Delta_B", "-1232.8"},
    {"moed", "Delta_B", "-2031.9"},
    {"van_raan", "Delta_B", "-748.2"},
    {"rousseau", "Delta_B", "-567.6"},
    {"schubert", "Delta_B", "-101.8"},
    {"martin", "Delta_B", "-366.4"},
    {"narin", "d", "23"},
    {"garfield", "d", "25"},
    {"braun", "d", "4"},
    {"small", "d", "23"},
    {"egghe", "d", "4"},
    {"ingwersen", "d", "6"},
    {"white", "d", "0"},
    {"narin", "h_d", "21"},
    {"garfield", "h_d", "21"},
    {"braun", "h_d", "34"},
    {"small", "h_d", "17"},
    {"egghe", "h_d", "29"},
    {"ingwersen", "h_d", "25"},
    {"white", "h_d", "19"},
    {"narin", "n_h_d", "921"},
    {"garfield", "n_h_d", "901"},
    {"braun", "n_h_d", "2378"},
    {"small", "n_h_d", "599"},
    {"egghe", "n_h_d", "1702"},
    {"ingwersen", "n_h_d", "1259"},
    {"white", "n_h_d", "2332"},
    {"narin", "e_d", "21.909"},
    {"garfield", "e_d", "21.448"},
    {"braun", "e_d", "34.957"},
    {"small", "e_d", "17.607"},
    {"egghe", "e_d", "29.343"},
    {"ingwersen", "e_d", "25.179"},
    {"white", "e_d", "44.396"},
    {"narin", "q_d", "3.177"},
    {"garfield", "q_d", "3.086"},
    {"braun", "q_d", "3.114"},
    {"small", "q_d", "3.145"},
    {"egghe", "q_d", "3.048"},
    {"ingwersen", "q_d", "3.029"},
    {"white", "q_d", "11.920"},
    {"narin", "J_d", "(7180.7, 8056.5)"},
    {"garfield", "J_d", "(10939.5, 11808.6)"},
    {"braun", "J_d", "(4508.1, 5918.4)"},
    {"small", "J_d", "(7655.5, 8362.6)"},
    {"egghe", "J_d", "(4693.3, 5889.5)"},
    {"ingwersen", "J_d", "(3454.0, 4483.6)"},
    {"white", "J_d", "(661.4, 1988.8)"},
    {"narin", "J_d_mean", "7618.6"},
    {"garfield", "J_d_mean", "11374.1"},
    {"braun", "J_d_mean", "5213.3"},
    {"small", "J_d_mean", "8009.1"},
    {"egghe", "J_d_mean", "5291.4"},
    {"ingwersen", "J_d_mean", "3968.8"},
    {"white", "J_d_mean", "1325.1"},
    {"narin", "h_d1", "21"},
    {"garfield", "h_d1", "21"},
    {"braun", "h_d1", "34"},
    {"small", "h_d1", "17"},
    {"egghe", "h_d1", "28"},
    {"ingwersen", "h_d1", "24"},
    {"white", "h_d1", "19"},
    {"narin", "n_h_d1", "874"},
    {"garfield", "n_h_d1", "849"},
    {"braun", "n_h_d1", "2261"},
    {"small", "n_h_d1", "559"},
    {"egghe", "n_h_d1", "1549"},
    {"ingwersen", "n_h_d1", "1104"},
    {"white", "n_h_d1", "1322"},
    {"narin", "e_d1", "20.809"},
    {"garfield", "e_d1", "20.199"},
    {"braun", "e_d1", "33.242"},
    {"small", "e_d1", "16.432"},
    {"egghe", "e_d1", "27.659"},
    {"ingwersen", "e_d1", "22.978"},
    {"white", "e_d1", "31.000"},
    {"narin", "q_d1", "2.964"},
    {"garfield", "q_d1", "2.850"},
    {"braun", "q_d1", "2.912"},
    {"small", "q_d1", "2.869"},
    {"egghe", "q_d1", "5.503"},
    {"ingwersen", "q_d1", "2.833"},
    {"white", "q_d1", "6.324"},
    {"narin", "J_d1", "(7255.4; 8115.6)"},
    {"garfield", "J_d1", "(11019.8; 11872.0)"},
    {"braun", "J_d1", "(4659.1; 6069.4)"},
    {"small", "J_d1", "(7719.1; 8410.1)"},
    {"egghe", "J_d1", "(4256.4; 6392.5)"},
    {"ingwersen", "J_d1", "(3468.7; 4441.4)"},
    {"white", "J_d1", "(1818.8; 2810.7)"},
    {"narin", "J_d1_mean", "7685.5"},
    {"garfield", "J_d1_mean", "11445.9"},
    {"braun", "J_d1_mean", "5364.2"},
    {"small", "J_d1_mean", "8064.6"},
    {"egghe", "J_d1_mean", "5324.4"},
    {"ingwersen", "J_d1_mean", "3955.1"},
    {"white", "J_d1_mean", "2314.8"},
    {"narin", "A", "7652.1"},
    {"garfield", "A", "11410.0"},
    {"braun", "A", "5288.8"},
    {"small", "A", "8036.9"},
    {"egghe", "A", "5307.9"},
    {"ingwersen", "A", "3962.0"},
    {"white", "A", "1820.0"},
    {"narin", "B", "7698.4"},
    {"garfield", "B", "11515.45"},
    {"braun", "B", "5793.0"},
    {"small", "B", "8098.2"},
    {"egghe", "B", "5570.8"},
    {"ingwersen", "B", "3553.7"},
    {"white", "B", "2399.75"},
    {"narin", "Delta_B", "-489.4"},
    {"garfield", "Delta_B", "-0.45"},
    {"braun", "Delta_B", "-113"},
    {"small", "Delta_B", "-405.2"},
    {"egghe", "Delta_B", "69.2"},
    {"ingwersen", "Delta_B", "52.3"},
    {"white", "Delta_B", "-0.75"},
}};

inline constexpr std::array<ExpectedCell, 297> kExtendedExpected{{
    {"freud_gs", "h", "288"},
    {"kim_gs", "h", "338"},
    {"kessler_gs", "h", "329"},
    {"einstein_gs", "h", "123"},
    {"erdos_gs", "h", "128"},
    {"tao_gs", "h", "106"},
    {"leydesdorff_gs", "h", "117"},
    {"meyer_gs", "h", "95"},
    {"tao_scopus", "h", "70"},
    {"freud_gs", "n_cit_h", "559724"},
    {"kim_gs", "n_cit_h", "312483"},
    {"kessler_gs", "n_cit_h", "432109"},
    {"einstein_gs", "n_cit_h", "150565"},
    {"erdos_gs", "n_cit_h", "72123"},
    {"tao_gs", "n_cit_h", "73134"},
    {"leydesdorff_gs", "n_cit_h", "54898"},
    {"meyer_gs", "n_cit_h", "36684"},
    {"tao_scopus", "n_cit_h", "42192"},
    {"freud_gs", "h_na", "433.614"},
    {"kim_gs", "h_na", "389.165"},
    {"kessler_gs", "h_na", "388.064"},
    {"einstein_gs", "h_na", "216.858"},
    {"erdos_gs", "h_na", "170.447"},
    {"tao_gs", "h_na", "162.998"},
    {"leydesdorff_gs", "h_na", "143.824"},
    {"meyer_gs", "h_na", "119.767"},
    {"tao_scopus", "h_na", "116.981"},
    {"freud_gs", "q", "12.496"},
    {"kim_gs", "q", "4.470"},
    {"kessler_gs", "q", "7.082"},
    {"einstein_gs", "q", "18.904"},
    {"erdos_gs", "q", "7.804"},
    {"tao_gs", "q", "12.018"},
    {"leydesdorff_gs", "q", "7.021"},
    {"meyer_gs", "q", "7.129"},
    {"tao_scopus", "q", "16.221"},
    {"freud_gs", "e", "690.493"},
    {"kim_gs", "e", "445.24"},
    {"kessler_gs", "e", "570.246"},
    {"einstein_gs", "e", "368.016"},
    {"erdos_gs", "e", "236.091"},
    {"tao_gs", "e", "248.793"},
    {"leydesdorff_gs", "e", "203.000"},
    {"meyer_gs", "e", "166.310"},
    {"tao_scopus", "e", "193.111"},
    {"freud_gs", "d", "97"},
    {"kim_gs", "d", "13"},
    {"kessler_gs", "d", "94"},
    {"einstein_gs", "d", "59"},
    {"erdos_gs", "d", "21"},
    {"tao_gs", "d", "14"},
    {"leydesdorff_gs", "d", "14"},
    {"meyer_gs", "d", "9"},
    {"tao_scopus", "d", "7"},
    {"freud_gs", "h_d", "236"},
    {"kim_gs", "h_d", "332"},
    {"kessler_gs", "h_d", "270"},
    {"einstein_gs", "h_d", "87"},
    {"erdos_gs", "h_d", "120"},
    {"tao_gs", "h_d", "101"},
    {"leydesdorff_gs", "h_d", "111"},
    {"meyer_gs", "h_d", "91"},
    {"tao_scopus", "h_d", "66"},
    {"freud_gs", "e_d", "236.692"},
    {"kim_gs", "e_d", "334.798"},
    {"kessler_gs", "e_d", "271.134"},
    {"einstein_gs", "e_d", "88.272"},
    {"erdos_gs", "e_d", "120.959"},
    {"tao_gs", "e_d", "102.587"},
    {"leydesdorff_gs", "e_d", "111.786"},
    {"meyer_gs", "e_d", "92.423"},
    {"tao_scopus", "e_d", "66.227"},
    {"freud_gs", "J_d", "(645355.4, 655060.8)"},
    {"kim_gs", "J_d", "(463086, 476765)"},
    {"kessler_gs", "J_d", "(540866.3, 551975.2)"},
    {"einstein_gs", "J_d", "(161903.2, 165495.2)"},
    {"erdos_gs", "J_d", "(90938.9, 97149.9)"},
    {"tao_gs", "J_d", "(86740.7, 90912.3)"},
    {"leydesdorff_gs", "J_d", "(67196.04, 791137.7)"},
    {"meyer_gs", "J_d", "(47024.7, 50372.2)"},
    {"tao_scopus", "J_d", "(46762, 50377)"},
    {"freud_gs", "A", "650208.1"},
    {"kim_gs", "A", "471172.0"},
    {"kessler_gs", "A", "546977.7"},
    {"einstein_gs", "A", "163876.5"},
    {"erdos_gs", "A", "94331.8"},
    {"tao_gs", "A", "89604.7"},
    {"leydesdorff_gs", "A", "73025.81"},
    {"meyer_gs", "A", "48907.5"},
    {"tao_scopus", "A", "48596.3"},
    {"freud_gs", "B", "649252.0"},
    {"kim_gs", "B", "477639.0"},
    {"kessler_gs", "B", "544539.6"},
    {"einstein_gs", "B", "163934.4"},
    {"erdos_gs", "B", "96000.2"},
    {"tao_gs", "B", "89648.3"},
    {"leydesdorff_gs", "B", "70691.9"},
    {"meyer_gs", "B", "50365.8"},
    {"tao_scopus", "B", "45930.5"},
    {"andrews_gs", "h", "66"},
    {"mcaleer_gs", "h", "79"},
    {"hirsch_scopus", "h", "60"},
    {"erdos_scopus", "h", "62"},
    {"edelman_gs", "h", "54"},
    {"gauss_gs", "h", "44"},
    {"andrews_scopus", "h", "41"},
    {"papadimitriou_gs", "h", "26"},
    {"zeilberger_scopus", "h", "25"},
    {"andrews_gs", "n_cit_h", "25557"},
    {"mcaleer_gs", "n_cit_h", "15879"},
    {"hirsch_scopus", "n_cit_h", "20447"},
    {"erdos_scopus", "n_cit_h", "11257"},
    {"edelman_gs", "n_cit_h", "7338"},
    {"gauss_gs", "n_cit_h", "9930"},
    {"andrews_scopus", "n_cit_h", "3918"},
    {"papadimitriou_gs", "n_cit_h", "5060"},
    {"zeilberger_scopus", "n_cit_h", "2222"},
    {"andrews_gs", "h_na", "97.259"},
    {"mcaleer_gs", "h_na", "87.589"},
    {"hirsch_scopus", "h_na", "84.508"},
    {"erdos_scopus", "h_na", "74.161"},
    {"edelman_gs", "h_na", "62.601"},
    {"gauss_gs", "h_na", "58.223"},
    {"andrews_scopus", "h_na", "43.796"},
    {"papadimitriou_gs", "h_na", "39.740"},
    {"zeilberger_scopus", "h_na", "30.371"},
    {"andrews_gs", "q", "10.734"},
    {"mcaleer_gs", "q", "4.089"},
    {"hirsch_scopus", "q", "10.393"},
    {"erdos_scopus", "q", "4.857"},
    {"edelman_gs", "q", "4.033"},
    {"gauss_gs", "q", "9.258"},
    {"andrews_scopus", "q", "3.662"},
    {"papadimitriou_gs", "q", "13.970"},
    {"zeilberger_scopus", "q", "6.111"},
    {"andrews_gs", "e", "145.606"},
    {"mcaleer_gs", "e", "98.173"},
    {"hirsch_scopus", "e", "130.027"},
    {"erdos_scopus", "e", "86.099"},
    {"edelman_gs", "e", "66.498"},
    {"gauss_gs", "e", "89.409"},
    {"andrews_scopus", "e", "47.297"},
    {"papadimitriou_gs", "e", "66.212"},
    {"zeilberger_scopus", "e", "39.963"},
    {"andrews_gs", "d", "7"},
    {"mcaleer_gs", "d", "10"},
    {"hirsch_scopus", "d", "12"},
    {"erdos_scopus", "d", "11"},
    {"edelman_gs", "d", "3"},
    {"gauss_gs", "d", "18"},
    {"andrews_scopus", "d", "1"},
    {"papadimitriou_gs", "d", "13"},
    {"zeilberger_scopus", "d", "10"},
    {"andrews_gs", "h_d", "63"},
    {"mcaleer_gs", "h_d", "74"},
    {"hirsch_scopus", "h_d", "55"},
    {"erdos_scopus", "h_d", "58"},
    {"edelman_gs", "h_d", "54"},
    {"gauss_gs", "h_d", "34"},
    {"andrews_scopus", "h_d", "40"},
    {"papadimitriou_gs", "h_d", "19"},
    {"zeilberger_scopus", "h_d", "20"},
    {"andrews_gs", "e_d", "64.861"},
    {"mcaleer_gs", "e_d", "74.135"},
    {"hirsch_scopus", "e_d", "55.723"},
    {"erdos_scopus", "e_d", "58.481"},
    {"edelman_gs", "e_d", "54.580"},
    {"gauss_gs", "e_d", "35.071"},
    {"andrews_scopus", "e_d", "40.633"},
    {"papadimitriou_gs", "e_d", "19.596"},
    {"zeilberger_scopus", "e_d", "20.976"},
    {"andrews_gs", "J_d", "(29948.9, 32563.4)"},
    {"mcaleer_gs", "J_d", "(21553.3, 26388.4)"},
    {"hirsch_scopus", "J_d", "(24039, 0, 26038.1)"},
    {"erdos_scopus", "J_d", "(15243.6, 17633.1)"},
    {"edelman_gs", "J_d", "(10506.3, 12732.9)"},
    {"gauss_gs", "J_d", "(11124.3, 12536.3)"},
    {"andrews_scopus", "J_d", "(5350.0, 7002.0)"},
    {"papadimitriou_gs", "J_d", "(5315.9, 6105.0)"},
    {"zeilberger_scopus", "J_d", "(2493.3, 3355.5)"},
    {"andrews_gs", "A", "31334.2"},
    {"mcaleer_gs", "A", "23747.8"},
    {"hirsch_scopus", "A", "25173.5"},
    {"erdos_scopus", "A", "16566.7"},
    {"edelman_gs", "A", "11670.1"},
    {"gauss_gs", "A", "11826.5"},
    {"andrews_scopus", "A", "6184.39"},
    {"papadimitriou_gs", "A", "5752.3"},
    {"zeilberger_scopus", "A", "2964.1"},
    {"andrews_gs", "B", "32367.2"},
    {"mcaleer_gs", "B", "24400.9"},
    {"hirsch_scopus", "B", "24865.0"},
    {"erdos_scopus", "B", "16451.9"},
    {"edelman_gs", "B", "11247.8"},
    {"gauss_gs", "B", "12409.1"},
    {"andrews_scopus", "B", "6690.1"},
    {"papadimitriou_gs", "B", "5657.8"},
    {"zeilberger_scopus", "B", "2708.9"},
    {"orovic_gs", "h", "31"},
    {"savage_gs", "h", "29"},
    {"spalevic_gs", "h", "29"},
    {"ziarati_gs", "h", "26"},
    {"yong_gs", "h", "24"},
    {"kalaj_gs", "h", "22"},
    {"vukoslavcevic_gs", "h", "14"},
    {"monkova", "h", "16"},
    {"mutafchiev_gs", "h", "10"},
    {"orovic_gs", "n_cit_h", "1993"},
    {"savage_gs", "n_cit_h", "2296"},
    {"spalevic_gs", "n_cit_h", "1199"},
    {"ziarati_gs", "n_cit_h", "1034"},
    {"yong_gs", "n_cit_h", "1206"},
    {"kalaj_gs", "n_cit_h", "947"},
    {"vukoslavcevic_gs", "n_cit_h", "814"},
    {"monkova", "n_cit_h", "440"},
    {"mutafchiev_gs", "n_cit_h", "172"},
    {"orovic_gs", "h_na", "30.003"},
    {"savage_gs", "h_na", "29.754"},
    {"spalevic_gs", "h_na", "28.761"},
    {"ziarati_gs", "h_na", "24.902"},
    {"yong_gs", "h_na", "21.826"},
    {"kalaj_gs", "h_na", "21.462"},
    {"vukoslavcevic_gs", "h_na", "16.321"},
    {"monkova", "h_na", "14.712"},
    {"mutafchiev_gs", "h_na", "9.546"},
    {"orovic_gs", "q", "3.148"},
    {"savage_gs", "q", "4.461"},
    {"spalevic_gs", "q", "1.851"},
    {"ziarati_gs", "q", "2.059"},
    {"yong_gs", "q", "3.188"},
    {"kalaj_gs", "q", "2.913"},
    {"vukoslavcevic_gs", "q", "7.306"},
    {"monkova", "q", "2.438"},
    {"mutafchiev_gs", "q", "2.440"},
    {"orovic_gs", "e", "32.143"},
    {"savage_gs", "e", "38.1445"},
    {"spalevic_gs", "e", "18.921"},
    {"ziarati_gs", "e", "18.921"},
    {"yong_gs", "e", "25.100"},
    {"kalaj_gs", "e", "21.517"},
    {"vukoslavcevic_gs", "e", "24.860"},
    {"monkova", "e", "13.565"},
    {"mutafchiev_gs", "e", "8.485"},
    {"orovic_gs", "d", "0"},
    {"savage_gs", "d", "2"},
    {"spalevic_gs", "d", "0"},
    {"ziarati_gs", "d", "0"},
    {"yong_gs", "d", "1"},
    {"kalaj_gs", "d", "0"},
    {"vukoslavcevic_gs", "d", "6"},
    {"monkova", "d", "0"},
    {"mutafchiev_gs", "d", "0"},
    {"orovic_gs", "h_d", "31"},
    {"savage_gs", "h_d", "28"},
    {"spalevic_gs", "h_d", "29"},
    {"ziarati_gs", "h_d", "26"},
    {"yong_gs", "h_d", "23"},
    {"kalaj_gs", "h_d", "22"},
    {"vukoslavcevic_gs", "h_d", "9"},
    {"monkova", "h_d", "16"},
    {"mutafchiev_gs", "h_d", "10"},
    {"orovic_gs", "e_d", "32.143"},
    {"savage_gs", "e_d", "28.089"},
    {"spalevic_gs", "e_d", "18.921"},
    {"ziarati_gs", "e_d", "18.921"},
    {"yong_gs", "e_d", "23.791"},
    {"kalaj_gs", "e_d", "21.517"},
    {"vukoslavcevic_gs", "e_d", "10.198"},
    {"monkova", "e_d", "13.565"},
    {"mutafchiev_gs", "e_d", "8.485"},
    {"orovic_gs", "J_d", "(2677, 3966.56)"},
    {"savage_gs", "J_d", "(2891.3, 4042.9)"},
    {"spalevic_gs", "J_d", "(2343.4, 3470.0)"},
    {"ziarati_gs", "J_d", "(1838.1, 2341.8))"},
    {"yong_gs", "J_d", "(1475.6, 2431.8)"},
    {"kalaj_gs", "J_d", "(1238.8, 2136.2)"},
    {"vukoslavcevic_gs", "J_d", "(757.2, 1149.3))"},
    {"monkova", "J_d", "(589.8, 1219.8))"},
    {"mutafchiev_gs", "J_d", "(173.8, 567.6)"},
    {"orovic_gs", "A", "3223.8"},
    {"savage_gs", "A", "3530.0"},
    {"spalevic_gs", "A", "2927.1"},
    {"ziarati_gs", "A", "2341.8"},
    {"yong_gs", "A", "1995.2"},
    {"kalaj_gs", "A", "1687.5"},
    {"vukoslavcevic_gs", "A", "969.3"},
    {"monkova", "A", "904.8"},
    {"mutafchiev_gs", "A", "370.7"},
    {"orovic_gs", "B", "2871.8"},
    {"savage_gs", "B", "3011.3"},
    {"spalevic_gs", "B", "3195.9"},
    {"ziarati_gs", "B", "2156.8"},
    {"yong_gs", "B", "2111.6"},
    {"kalaj_gs", "B", "1671.8"},
    {"vukoslavcevic_gs", "B", "834.73"},
    {"monkova", "B", "689.2"},
    {"mutafchiev_gs", "B", "275.4"},
}};

inline constexpr std::array<ExpectedCell, 82> kBrownExpected{{
    {"leydesdorff", "brown", "(82.9, 87.9)"},
    {"glanzel", "brown", "(56.5, 60.6)"},
    {"moed", "brown", "(45.2, 49.0)"},
    {"van_raan", "brown", "(40.1, 58.4)"},
    {"rousseau", "brown", "(46.6, 50.4)"},
    {"schubert", "brown", "(45.2, 48.9)"},
    {"martin", "brown", "(37.9, 56.2.7)"},
    {"narin", "brown", "(39.554, 5)"},
    {"garfield", "brown", "(55.9, 60.)"},
    {"braun", "brown", "(38.9, 42.5)"},
    {"small", "brown", "(45.5, 49.3)"},
    {"egghe", "brown", "(38.8, 42.3)"},
    {"ingwersen", "brown", "(28.2, 36.6)"},
    {"white", "brown", "(24.9, 28.0)"},
    {"leydesdorff", "brown_mean", "85.4"},
    {"glanzel", "brown_mean", "58.6"},
    {"moed", "brown_mean", "47.1"},
    {"van_raan", "brown_mean", "49.2"},
    {"rousseau", "brown_mean", "48.5"},
    {"schubert", "brown_mean", "47.1"},
    {"martin", "brown_mean", "47.1"},
    {"narin", "brown_mean", "47.0"},
    {"garfield", "brown_mean", "58.0"},
    {"braun", "brown_mean", "40.7"},
    {"small", "brown_mean", "47.4"},
    {"egghe", "brown_mean", "40.6"},
    {"ingwersen", "brown_mean", "32.4"},
    {"white", "brown_mean", "26.5"},
    {"freud_gs", "brown", "(361.4, 505.1)"},
    {"kim_gs", "brown", "(324.2, 453.5)"},
    {"kessler_gs", "brown", "(323.3, 452.2)"},
    {"einstein_gs", "brown", "(180.2, 253.2)"},
    {"erdos_gs", "brown", "(141.7, 199.6)"},
    {"tao_gs", "brown", "(135.1, 190.6)"},
    {"leydesdorff_gs", "brown", "(119.1, 168.3)"},
    {"meyer_gs", "brown", "(99.0, 140.3)"},
    {"tao_scopus", "brown", "(96.7, 137.1)"},
    {"andrews_gs", "brown", "(80.2, 114.2)"},
    {"mcaleer_gs", "brown", "(72.1, 102.9)"},
    {"hirsch_scopus", "brown", "(69.5, 99.3)"},
    {"erdos_scopus", "brown", "(60.9, 87.3)"},
    {"edelman_gs", "brown", "(51.2, 73.9)"},
    {"freud_gs", "brown_mean", "433.3"},
    {"kim_gs", "brown_mean", "388.9"},
    {"kessler_gs", "brown_mean", "387.75"},
    {"einstein_gs", "brown_mean", "216.70"},
    {"erdos_gs", "brown_mean", "170.7"},
    {"tao_gs", "brown_mean", "162.9"},
    {"leydesdorff_gs", "brown_mean", "143.7"},
    {"meyer_gs", "brown_mean", "119.65"},
    {"tao_scopus", "brown_mean", "116.9"},
    {"andrews_gs", "brown_mean", "194.4"},
    {"mcaleer_gs", "brown_mean", "87.5"},
    {"hirsch_scopus", "brown_mean", "84.4"},
    {"erdos_scopus", "brown_mean", "74.1"},
    {"edelman_gs", "brown_mean", "62.55"},
    {"gauss_gs", "brown", "(49.8, 66.6)"},
    {"andrews_scopus", "brown", "(37.7, 43.8)"},
    {"papadimitriou_gs", "brown", "(32.1, 47.3)"},
    {"zeilberger_scopus", "brown", "(24.3, 36.4)"},
    {"orovic_gs", "brown", "(24.0, 36.0)"},
    {"savage_gs", "brown", "(23.7, 35.7)"},
    {"spalevic_gs", "brown", "(22.7, 34.7)"},
    {"ziarati_gs", "brown", "(19.7, 30.0)"},
    {"yong_gs", "brown", "(16.6, 27)"},
    {"kalaj_gs", "brown", "(16.8, 26.1)"},
    {"vukoslavcevic_gs", "brown", "(12.5, 20.0)"},
    {"monkova", "brown", "(11.2, 18.2)"},
    {"mutafchiev_gs", "brown", "(6.9, 12.2)"},
    {"gauss_gs", "brown_mean", "58.2"},
    {"andrews_scopus", "brown_mean", "40.8"},
    {"papadimitriou_gs", "brown_mean", "39.7"},
    {"zeilberger_scopus", "brown_mean", "30.4"},
    {"orovic_gs", "brown_mean", "30"},
    {"savage_gs", "brown_mean", "29.7"},
    {"spalevic_gs", "brown_mean", "28.7"},
    {"ziarati_gs", "brown_mean", "29.9"},
    {"yong_gs", "brown_mean", "21.8"},
    {"kalaj_gs", "brown_mean", "21.5"},
    {"vukoslavcevic_gs", "brown_mean", "16.3"},
    {"monkova", "brown_mean", "14.7"},
    {"mutafchiev_gs", "brown_mean", "9.6"},
}};

}  // namespace citest::tables
