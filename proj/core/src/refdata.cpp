#include "mapfit/refdata.hpp"

namespace mapfit::refdata {

namespace {

// cartesian_forward: m, n, first, second
constexpr double k_cartesian_forward[][4] = {
    {0, 0, 0.012661, -0.35625},
    {1, 0, 0.042116, 0.070531},
    {1, 1, -0.02541, 0.122901},
    {2, 0, 0.016011, -0.00651},
    {2, 1, 0.006537, -0.01321},
    {2, 2, -0.00659, 0.018831},
    {3, 0, -0.00094, 0.000247},
    {3, 1, -0.00047, 0.000597},
    {3, 2, 0.001222, -0.00017},
    {3, 3, -0.00012, -0.00094},
};

// cartesian_inverse: m, n, first, second
constexpr double k_cartesian_inverse[][4] = {
    {0, 0, 0.981, 1.988714},
    {1, 0, 9.122476, -1.44229},
    {1, 1, 2.196286, 6.027714},
    {2, 0, -3.16571, 0.8},
    {2, 1, -3.39543, 3.998857},
    {2, 2, -0.35429, -2.75429},
    {3, 0, 2.026667, -0.32},
    {3, 1, 0.16, -0.38857},
    {3, 2, 0.251429, -1.71429},
    {3, 3, 0.16, 1.76},
};

// concentric_inverse: m, n, first, second
constexpr double k_concentric_inverse[][4] = {
    {0, 0, 0.130265, 4.008964},
    {1, 0, 0.864018, -5.2119},
    {1, 1, 0.015173, -0.83887},
    {2, 0, 0.028228, 2.357771},
    {2, 1, -0.0247, 2.283302},
    {2, 2, 0.0, -0.21154},
    {3, 0, 0.014572, -0.37876},
    {3, 1, 0.012222, -0.72033},
    {3, 2, -0.48751, 0.05004},
    {3, 3, 0.0, 0.284279},
    {4, 0, -0.00777, -0.01806},
    {4, 1, -0.00327, 0.192502},
    {4, 2, 0.0, 0.0},
    {4, 3, -0.02159, -0.23181},
    {4, 4, 0.0, -0.17322},
    {5, 0, 0.001289, 0.011132},
    {5, 1, 0.000421, -0.02484},
    {5, 2, 0.0, 0.0},
    {5, 3, 0.0, 0.0},
    {5, 4, 0.059702, 0.036893},
    {5, 5, 0.0, 0.048884},
    {6, 0, -7.3e-05, -0.00084},
    {6, 1, -2.1e-05, 0.001242},
    {6, 2, 0.0, 0.0},
    {6, 3, 0.0, 0.0},
    {6, 4, 0.0, 0.0},
    {6, 5, -0.0076, 0.0},
    {6, 6, 0.0, -0.00519},
};

// eccentric_inverse: m, n, first, second
constexpr double k_eccentric_inverse[][4] = {
    {0, 0, -1.04155, 4.008964},
    {1, 0, 1.611337, -5.2119},
    {1, 1, -0.07819, -0.83887},
    {2, 0, -0.10756, 2.357771},
    {2, 1, 0.110674, 2.283302},
    {2, 2, 0.0, -0.21154},
    {3, 0, 0.050103, -0.37876},
    {3, 1, -0.06298, -0.72033},
    {3, 2, -0.48751, 0.05004},
    {3, 3, 0.0, 0.284279},
    {4, 0, -0.01215, -0.01806},
    {4, 1, 0.016832, 0.192502},
    {4, 2, 0.0, 0.0},
    {4, 3, -0.02159, -0.23181},
    {4, 4, 0.0, -0.17322},
    {5, 0, 0.001477, 0.011132},
    {5, 1, -0.00217, -0.02484},
    {5, 2, 0.0, 0.0},
    {5, 3, 0.0, 0.0},
    {5, 4, 0.059702, 0.036893},
    {5, 5, 0.0, 0.048884},
    {6, 0, -7.1e-05, -0.00084},
    {6, 1, 0.000109, 0.001242},
    {6, 2, 0.0, 0.0},
    {6, 3, 0.0, 0.0},
    {6, 4, 0.0, 0.0},
    {6, 5, -0.0076, 0.0},
    {6, 6, 0.0, -0.00519},
};

// potential table: xi, then values at eta = 0..180 step 30, then exact
constexpr double k_potential[][9] = {
    {2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {3.0, 0.375004, 0.375004, 0.376727, 0.376666, 0.374204, 0.371361, 0.371361, 0.36907},
    {4.0, 0.630386, 0.630386, 0.629934, 0.629739, 0.629603, 0.62986, 0.62986, 0.63093},
    {5.0, 0.829118, 0.829118, 0.826957, 0.826588, 0.82811, 0.830754, 0.830754, 0.834044},
    {6.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
};

// accuracy of x: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_x[][11] = {
    {0.0, 2.0, 2.0, 3.5, 3.5, 5.0, 5.0, 6.5, 6.5, 8.0, 8.0},
    {30.0, 1.732051, 1.732051, 3.098076, 3.098076, 4.464102, 4.464102, 5.830127, 5.830127, 7.196152, 7.196152},
    {60.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0, 5.0, 5.0},
    {90.0, 0.0, 0.0, 0.5, 0.5, 1.0, 1.0, 1.5, 1.5, 2.0, 2.0},
    {120.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0},
    {150.0, -1.73205, -1.73205, -2.09808, -2.09808, -2.4641, -2.4641, -2.83013, -2.83013, -3.19615, -3.19615},
    {180.0, -2.0, -2.0, -2.5, -2.5, -3.0, -3.0, -3.5, -3.5, -4.0, -4.0},
};

// accuracy of x_xi: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_x_xi[][11] = {
    {0.0, 1.497979, 1.5, 1.500931, 1.5, 1.499095, 1.5, 1.501783, 1.5, 1.491166, 1.5},
    {30.0, 1.365369, 1.366025, 1.366615, 1.366025, 1.365348, 1.366025, 1.367467, 1.366025, 1.358556, 1.366025},
    {60.0, 1.000708, 1.0, 1.000249, 1.0, 0.99955, 1.0, 1.0011, 1.0, 0.993895, 1.0},
    {90.0, 0.502072, 0.5, 0.499908, 0.5, 0.499778, 0.5, 0.500759, 0.5, 0.49526, 0.5},
    {120.0, 0.003437, 0.0, -0.00043, 0.0, 5e-06, 0.0, 0.000418, 0.0, -0.00338, 0.0},
    {150.0, -0.36122, -0.36603, -0.3668, -0.36603, -0.36579, -0.36603, -0.36595, -0.36603, -0.36804, -0.36603},
    {180.0, -0.49383, -0.5, -0.50112, -0.5, -0.49954, -0.5, -0.50026, -0.5, -0.50065, -0.5},
};

// accuracy of x_eta: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_x_eta[][11] = {
    {0.0, -0.00539, 0.0, -0.00809, 0.0, -0.01078, 0.0, -0.01348, 0.0, -0.01617, 0.0},
    {30.0, -0.99908, -1.0, -1.49863, -1.5, -1.99817, -2.0, -2.49771, -2.5, -2.99725, -3.0},
    {60.0, -1.73242, -1.73205, -2.59863, -2.59808, -3.46484, -3.4641, -4.33105, -4.33013, -5.19726, -5.19615},
    {90.0, -1.99972, -2.0, -2.99958, -3.0, -3.99944, -4.0, -4.9993, -5.0, -5.99916, -6.0},
    {120.0, -1.73242, -1.73205, -2.59863, -2.59808, -3.46484, -3.4641, -4.33105, -4.33013, -5.19726, -5.19615},
    {150.0, -0.99908, -1.0, -1.49863, -1.5, -1.99817, -2.0, -2.49771, -2.5, -2.99725, -3.0},
    {180.0, -0.00539, 0.0, -0.00809, 0.0, -0.01078, 0.0, -0.01348, 0.0, -0.01617, 0.0},
};

// accuracy of x_xixi: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_x_xixi[][11] = {
    {0.0, 0.005016, 0.0, -0.0007, 0.0, -0.00057, 0.0, 0.003823, 0.0, -0.04021, 0.0},
    {30.0, -0.00067, 0.0, -0.00013, 0.0, -0.00057, 0.0, 0.003254, 0.0, -0.03453, 0.0},
    {60.0, -0.00636, 0.0, 0.000437, 0.0, -0.00057, 0.0, 0.002686, 0.0, -0.02884, 0.0},
    {90.0, -0.01204, 0.0, 0.001005, 0.0, -0.00057, 0.0, 0.002117, 0.0, -0.02316, 0.0},
    {120.0, -0.01773, 0.0, 0.001574, 0.0, -0.00057, 0.0, 0.001548, 0.0, -0.01747, 0.0},
    {150.0, -0.02341, 0.0, 0.002143, 0.0, -0.00057, 0.0, 0.00098, 0.0, -0.01179, 0.0},
    {180.0, -0.0291, 0.0, 0.002711, 0.0, -0.00057, 0.0, 0.000411, 0.0, -0.0061, 0.0},
};

// accuracy of x_xieta: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_x_xieta[][11] = {
    {0.0, -8.9e-05, 0.0, -0.00335, 0.0, -0.00226, 0.0, -0.00335, 0.0, -8.9e-05, 0.0},
    {30.0, -0.49694, -0.5, -0.50019, -0.5, -0.49911, -0.5, -0.50019, -0.5, -0.49694, -0.5},
    {60.0, -0.86361, -0.86603, -0.86686, -0.86603, -0.86578, -0.86603, -0.86686, -0.86603, -0.86361, -0.86603},
    {90.0, -0.99725, -1.0, -1.00051, -1.0, -0.99943, -1.0, -1.00051, -1.0, -0.99725, -1.0},
    {120.0, -0.86361, -0.86603, -0.86686, -0.86603, -0.86578, -0.86603, -0.86686, -0.86603, -0.86361, -0.86603},
    {150.0, -0.49694, -0.5, -0.50019, -0.5, -0.49911, -0.5, -0.50019, -0.5, -0.49694, -0.5},
    {180.0, -8.9e-05, 0.0, -0.00335, 0.0, -0.00226, 0.0, -0.00335, 0.0, -8.9e-05, 0.0},
};

// accuracy of x_etaeta: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_x_etaeta[][11] = {
    {0.0, -1.95002, -2.0, -2.92503, -3.0, -3.90005, -4.0, -4.87506, -5.0, -5.85007, -6.0},
    {30.0, -1.73649, -1.73205, -2.60473, -2.59808, -3.47297, -3.4641, -4.34122, -4.33013, -5.20946, -5.19615},
    {60.0, -0.99919, -1.0, -1.49878, -1.5, -1.99837, -2.0, -2.49796, -2.5, -2.99756, -3.0},
    {90.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {120.0, 0.999185, 1.0, 1.498778, 1.5, 1.99837, 2.0, 2.497963, 2.5, 2.997555, 3.0},
    {150.0, 1.736487, 1.732051, 2.60473, 2.598076, 3.472974, 3.464102, 4.341217, 4.330127, 5.209461, 5.196152},
    {180.0, 1.950022, 2.0, 2.925033, 3.0, 3.900045, 4.0, 4.875056, 5.0, 5.850067, 6.0},
};

// accuracy of y: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_y[][11] = {
    {0.0, -4.2e-05, 0.0, -2.1e-05, 0.0, 0.0, 0.0, 2.1e-05, 0.0, 4.2e-05, 0.0},
    {30.0, 1.00025, 1.0, 1.500125, 1.5, 2.0, 2.0, 2.499875, 2.5, 2.99975, 3.0},
    {60.0, 1.731426, 1.732051, 2.597764, 2.598076, 3.464102, 3.464102, 4.330439, 4.330127, 5.196777, 5.196152},
    {90.0, 2.000833, 2.0, 3.000416, 3.0, 4.0, 4.0, 4.999584, 5.0, 5.999167, 6.0},
    {120.0, 1.731426, 1.732051, 2.597764, 2.598076, 3.464102, 3.464102, 4.330439, 4.330127, 5.196777, 5.196152},
    {150.0, 1.00025, 1.0, 1.500125, 1.5, 2.0, 2.0, 2.499875, 2.5, 2.99975, 3.0},
    {180.0, -4.2e-05, 0.0, -2.1e-05, 0.0, 0.0, 0.0, 2.1e-05, 0.0, 4.2e-05, 0.0},
};

// accuracy of y_xi: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_y_xi[][11] = {
    {0.0, -0.17369, 0.0, 0.04846, 0.0, -0.03561, 0.0, 0.05848, 0.0, -0.25385, 0.0},
    {30.0, 0.341767, 0.5, 0.544412, 0.5, 0.466844, 0.5, 0.554432, 0.5, 0.261607, 0.5},
    {60.0, 0.723836, 0.866025, 0.906973, 0.866025, 0.835908, 0.866025, 0.916993, 0.866025, 0.643677, 0.866025},
    {90.0, 0.872689, 1.0, 1.036317, 1.0, 0.971755, 1.0, 1.046337, 1.0, 0.792529, 1.0},
    {120.0, 0.75505, 0.866025, 0.89917, 0.866025, 0.84111, 0.866025, 0.90919, 0.866025, 0.67489, 0.866025},
    {150.0, 0.404194, 0.5, 0.528805, 0.5, 0.477248, 0.5, 0.538825, 0.5, 0.324034, 0.5},
    {180.0, -0.08005, 0.0, 0.025049, 0.0, -0.02001, 0.0, 0.035069, 0.0, -0.16021, 0.0},
};

// accuracy of y_eta: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_y_eta[][11] = {
    {0.0, 2.028745, 2.0, 3.01545, 3.0, 4.002155, 4.0, 4.98886, 5.0, 5.975565, 6.0},
    {30.0, 1.724581, 1.732051, 2.59422, 2.598076, 3.463858, 3.464102, 4.333497, 4.330127, 5.203136, 5.196152},
    {60.0, 1.003309, 1.0, 1.501679, 1.5, 2.000049, 2.0, 2.498419, 2.5, 2.996789, 3.0},
    {90.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {120.0, -1.00331, -1.0, -1.50168, -1.5, -2.00005, -2.0, -2.49842, -2.5, -2.99679, -3.0},
    {150.0, -1.72458, -1.73205, -2.59422, -2.59808, -3.46386, -3.4641, -4.3335, -4.33013, -5.20314, -5.19615},
    {180.0, -2.02875, -2.0, -3.01545, -3.0, -4.00216, -4.0, -4.98886, -5.0, -5.97557, -6.0},
};

// accuracy of y_xixi: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_y_xixi[][11] = {
    {0.0, 0.683732, 0.0, -0.07071, 0.0, -0.00668, 0.0, 0.107451, 0.0, -1.09789, 0.0},
    {30.0, 0.618704, 0.0, -0.06421, 0.0, -0.00668, 0.0, 0.100948, 0.0, -1.03286, 0.0},
    {60.0, 0.553675, 0.0, -0.05771, 0.0, -0.00668, 0.0, 0.094445, 0.0, -0.96784, 0.0},
    {90.0, 0.488647, 0.0, -0.0512, 0.0, -0.00668, 0.0, 0.087943, 0.0, -0.90281, 0.0},
    {120.0, 0.423618, 0.0, -0.0447, 0.0, -0.00668, 0.0, 0.08144, 0.0, -0.83778, 0.0},
    {150.0, 0.35859, 0.0, -0.0382, 0.0, -0.00668, 0.0, 0.074937, 0.0, -0.77275, 0.0},
    {180.0, 0.293561, 0.0, -0.03169, 0.0, -0.00668, 0.0, 0.068434, 0.0, -0.70772, 0.0},
};

// accuracy of y_xieta: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_y_xieta[][11] = {
    {0.0, 1.016512, 1.0, 0.979253, 1.0, 0.991673, 1.0, 0.979253, 1.0, 1.016512, 1.0},
    {30.0, 0.899446, 0.866025, 0.862187, 0.866025, 0.874607, 0.866025, 0.862187, 0.866025, 0.899446, 0.866025},
    {60.0, 0.528177, 0.5, 0.490918, 0.5, 0.503338, 0.5, 0.490918, 0.5, 0.528177, 0.5},
    {90.0, 0.029807, 0.0, -0.00745, 0.0, 0.004968, 0.0, -0.00745, 0.0, 0.029807, 0.0},
    {120.0, -0.46856, -0.5, -0.50582, -0.5, -0.4934, -0.5, -0.50582, -0.5, -0.46856, -0.5},
    {150.0, -0.83983, -0.86603, -0.87709, -0.86603, -0.86467, -0.86603, -0.87709, -0.86603, -0.83983, -0.86603},
    {180.0, -0.9569, -1.0, -0.99416, -1.0, -0.98174, -1.0, -0.99416, -1.0, -0.9569, -1.0},
};

// accuracy of y_etaeta: rows eta deg 0..180 step 30; pairs (num, exact) for xi = 2..6
constexpr double k_acc_y_etaeta[][11] = {
    {0.0, -0.22292, 0.0, -0.12284, 0.0, -0.02276, 0.0, 0.07732, 0.0, 0.177401, 0.0},
    {30.0, -0.98479, -1.0, -1.49157, -1.5, -1.99836, -2.0, -2.50514, -2.5, -3.01192, -3.0},
    {60.0, -1.72259, -1.73205, -2.5935, -2.59808, -3.4644, -3.4641, -4.3353, -4.33013, -5.2062, -5.19615},
    {90.0, -2.01531, -2.0, -3.00759, -3.0, -3.99986, -4.0, -4.99213, -5.0, -5.98441, -6.0},
    {120.0, -1.72259, -1.73205, -2.5935, -2.59808, -3.4644, -3.4641, -4.3353, -4.33013, -5.2062, -5.19615},
    {150.0, -0.98479, -1.0, -1.49157, -1.5, -1.99836, -2.0, -2.50514, -2.5, -3.01192, -3.0},
    {180.0, -0.22292, 0.0, -0.12284, 0.0, -0.02276, 0.0, 0.07732, 0.0, 0.177401, 0.0},
};


CoeffTable make_coeff_table(int degree, const double (*rows)[4], int count) {
    CoeffTable t;
    t.degree = degree;
    for (int k = 0; k < count; ++k) {
        t.index.push_back({static_cast<int>(rows[k][0]), static_cast<int>(rows[k][1])});
        t.first.push_back(rows[k][2]);
        t.second.push_back(rows[k][3]);
    }
    return t;
}

AccuracyTable make_accuracy_table(const char* component, const double (*rows)[11]) {
    AccuracyTable t;
    t.component = component;
    t.xi = {2.0, 3.0, 4.0, 5.0, 6.0};
    t.num.resize(7, 5);
    t.exact.resize(7, 5);
    for (int r = 0; r < 7; ++r) {
        t.eta_deg.push_back(rows[r][0]);
        for (int c = 0; c < 5; ++c) {
            t.num(r, c) = rows[r][1 + 2 * c];
            t.exact(r, c) = rows[r][2 + 2 * c];
        }
    }
    return t;
}

}  // namespace

const CoeffTable& cartesian_forward_coeffs() {
    static const CoeffTable t = make_coeff_table(3, k_cartesian_forward, 10);
    return t;
}

const CoeffTable& cartesian_inverse_coeffs() {
    static const CoeffTable t = make_coeff_table(3, k_cartesian_inverse, 10);
    return t;
}

const CoeffTable& concentric_inverse_coeffs() {
    static const CoeffTable t = make_coeff_table(6, k_concentric_inverse, 28);
    return t;
}

const CoeffTable& eccentric_inverse_coeffs() {
    static const CoeffTable t = make_coeff_table(6, k_eccentric_inverse, 28);
    return t;
}

const PotentialReference& concentric_potential() {
    static const PotentialReference ref = [] {
        PotentialReference r;
        r.eta_deg = {0.0, 30.0, 60.0, 90.0, 120.0, 150.0, 180.0};
        r.numeric.resize(5, 7);
        for (int i = 0; i < 5; ++i) {
            r.xi.push_back(k_potential[i][0]);
            for (int j = 0; j < 7; ++j)
                r.numeric(i, j) = k_potential[i][1 + j];
            r.exact.push_back(k_potential[i][8]);
        }
        return r;
    }();
    return ref;
}

const std::vector<AccuracyTable>& eccentric_accuracy() {
    static const std::vector<AccuracyTable> tables = [] {
        std::vector<AccuracyTable> v;
        v.push_back(make_accuracy_table("x", k_acc_x));
        v.push_back(make_accuracy_table("x_xi", k_acc_x_xi));
        v.push_back(make_accuracy_table("x_eta", k_acc_x_eta));
        v.push_back(make_accuracy_table("x_xixi", k_acc_x_xixi));
        v.push_back(make_accuracy_table("x_xieta", k_acc_x_xieta));
        v.push_back(make_accuracy_table("x_etaeta", k_acc_x_etaeta));
        v.push_back(make_accuracy_table("y", k_acc_y));
        v.push_back(make_accuracy_table("y_xi", k_acc_y_xi));
        v.push_back(make_accuracy_table("y_eta", k_acc_y_eta));
        v.push_back(make_accuracy_table("y_xixi", k_acc_y_xixi));
        v.push_back(make_accuracy_table("y_xieta", k_acc_y_xieta));
        v.push_back(make_accuracy_table("y_etaeta", k_acc_y_etaeta));
        return v;
    }();
    return tables;
}

}  // namespace mapfit::refdata
