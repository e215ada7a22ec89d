#include "dlinear/reference.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace dlinear::reference {

namespace {

constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

// Published MSE/MAE figures. Values are copied verbatim at three decimals.
constexpr std::array kPublished = std::to_array<PublishedResult>({
    {"Electricity", "dlinear-s", 96, 96, 0.194, 0.276, Setting::main},
    {"Electricity", "dlinear-s", 96, 192, 0.193, 0.280, Setting::main},
    {"Electricity", "dlinear-s", 96, 336, 0.206, 0.296, Setting::main},
    {"Electricity", "dlinear-s", 96, 720, 0.242, 0.329, Setting::main},
    {"Exchange-Rate", "dlinear-s", 96, 96, 0.078, 0.197, Setting::main},
    {"Exchange-Rate", "dlinear-s", 96, 192, 0.159, 0.292, Setting::main},
    {"Exchange-Rate", "dlinear-s", 96, 336, 0.274, 0.391, Setting::main},
    {"Exchange-Rate", "dlinear-s", 96, 720, 0.558, 0.574, Setting::main},
    {"Traffic", "dlinear-s", 96, 96, 0.650, 0.396, Setting::main},
    {"Traffic", "dlinear-s", 96, 192, 0.598, 0.370, Setting::main},
    {"Traffic", "dlinear-s", 96, 336, 0.605, 0.373, Setting::main},
    {"Traffic", "dlinear-s", 96, 720, 0.645, 0.394, Setting::main},
    {"Weather", "dlinear-s", 96, 96, 0.196, 0.255, Setting::main},
    {"Weather", "dlinear-s", 96, 192, 0.237, 0.296, Setting::main},
    {"Weather", "dlinear-s", 96, 336, 0.283, 0.335, Setting::main},
    {"Weather", "dlinear-s", 96, 720, 0.345, 0.381, Setting::main},
    {"ILI", "dlinear-s", 36, 24, 2.398, 1.040, Setting::main},
    {"ILI", "dlinear-s", 36, 36, 2.646, 1.088, Setting::main},
    {"ILI", "dlinear-s", 36, 48, 2.614, 1.086, Setting::main},
    {"ILI", "dlinear-s", 36, 60, 2.804, 1.146, Setting::main},
    {"Electricity", "dlinear-i", 96, 96, 0.184, 0.270, Setting::main},
    {"Electricity", "dlinear-i", 96, 192, 0.184, 0.273, Setting::main},
    {"Electricity", "dlinear-i", 96, 336, 0.197, 0.289, Setting::main},
    {"Electricity", "dlinear-i", 96, 720, 0.234, 0.323, Setting::main},
    {"Exchange-Rate", "dlinear-i", 96, 96, 0.084, 0.216, Setting::main},
    {"Exchange-Rate", "dlinear-i", 96, 192, 0.157, 0.298, Setting::main},
    {"Exchange-Rate", "dlinear-i", 96, 336, 0.236, 0.379, Setting::main},
    {"Exchange-Rate", "dlinear-i", 96, 720, 0.626, 0.634, Setting::main},
    {"Traffic", "dlinear-i", 96, 96, 0.647, 0.403, Setting::main},
    {"Traffic", "dlinear-i", 96, 192, 0.602, 0.375, Setting::main},
    {"Traffic", "dlinear-i", 96, 336, 0.607, 0.377, Setting::main},
    {"Traffic", "dlinear-i", 96, 720, 0.646, 0.398, Setting::main},
    {"Weather", "dlinear-i", 96, 96, 0.164, 0.237, Setting::main},
    {"Weather", "dlinear-i", 96, 192, 0.209, 0.282, Setting::main},
    {"Weather", "dlinear-i", 96, 336, 0.263, 0.327, Setting::main},
    {"Weather", "dlinear-i", 96, 720, 0.338, 0.380, Setting::main},
    {"ILI", "dlinear-i", 36, 24, 3.015, 1.192, Setting::main},
    {"ILI", "dlinear-i", 36, 36, 2.737, 1.036, Setting::main},
    {"ILI", "dlinear-i", 36, 48, 2.577, 1.043, Setting::main},
    {"ILI", "dlinear-i", 36, 60, 2.821, 1.091, Setting::main},
    {"Electricity", "fedformer", 96, 96, 0.193, 0.308, Setting::main},
    {"Electricity", "fedformer", 96, 192, 0.201, 0.315, Setting::main},
    {"Electricity", "fedformer", 96, 336, 0.214, 0.329, Setting::main},
    {"Electricity", "fedformer", 96, 720, 0.246, 0.355, Setting::main},
    {"Exchange-Rate", "fedformer", 96, 96, 0.148, 0.278, Setting::main},
    {"Exchange-Rate", "fedformer", 96, 192, 0.271, 0.380, Setting::main},
    {"Exchange-Rate", "fedformer", 96, 336, 0.460, 0.500, Setting::main},
    {"Exchange-Rate", "fedformer", 96, 720, 1.195, 0.841, Setting::main},
    {"Traffic", "fedformer", 96, 96, 0.587, 0.366, Setting::main},
    {"Traffic", "fedformer", 96, 192, 0.604, 0.373, Setting::main},
    {"Traffic", "fedformer", 96, 336, 0.621, 0.383, Setting::main},
    {"Traffic", "fedformer", 96, 720, 0.626, 0.382, Setting::main},
    {"Weather", "fedformer", 96, 96, 0.217, 0.296, Setting::main},
    {"Weather", "fedformer", 96, 192, 0.276, 0.336, Setting::main},
    {"Weather", "fedformer", 96, 336, 0.339, 0.380, Setting::main},
    {"Weather", "fedformer", 96, 720, 0.403, 0.428, Setting::main},
    {"ILI", "fedformer", 36, 24, 3.228, 1.260, Setting::main},
    {"ILI", "fedformer", 36, 36, 2.679, 1.080, Setting::main},
    {"ILI", "fedformer", 36, 48, 2.622, 1.078, Setting::main},
    {"ILI", "fedformer", 36, 60, 2.857, 1.157, Setting::main},
    {"Electricity", "autoformer", 96, 96, 0.201, 0.317, Setting::main},
    {"Electricity", "autoformer", 96, 192, 0.222, 0.334, Setting::main},
    {"Electricity", "autoformer", 96, 336, 0.231, 0.338, Setting::main},
    {"Electricity", "autoformer", 96, 720, 0.254, 0.361, Setting::main},
    {"Exchange-Rate", "autoformer", 96, 96, 0.197, 0.323, Setting::main},
    {"Exchange-Rate", "autoformer", 96, 192, 0.300, 0.369, Setting::main},
    {"Exchange-Rate", "autoformer", 96, 336, 0.509, 0.524, Setting::main},
    {"Exchange-Rate", "autoformer", 96, 720, 1.447, 0.941, Setting::main},
    {"Traffic", "autoformer", 96, 96, 0.613, 0.388, Setting::main},
    {"Traffic", "autoformer", 96, 192, 0.616, 0.382, Setting::main},
    {"Traffic", "autoformer", 96, 336, 0.622, 0.337, Setting::main},
    {"Traffic", "autoformer", 96, 720, 0.660, 0.408, Setting::main},
    {"Weather", "autoformer", 96, 96, 0.266, 0.336, Setting::main},
    {"Weather", "autoformer", 96, 192, 0.307, 0.367, Setting::main},
    {"Weather", "autoformer", 96, 336, 0.359, 0.395, Setting::main},
    {"Weather", "autoformer", 96, 720, 0.419, 0.428, Setting::main},
    {"ILI", "autoformer", 36, 24, 3.483, 1.287, Setting::main},
    {"ILI", "autoformer", 36, 36, 3.103, 1.148, Setting::main},
    {"ILI", "autoformer", 36, 48, 2.669, 1.085, Setting::main},
    {"ILI", "autoformer", 36, 60, 2.770, 1.125, Setting::main},
    {"Electricity", "repeat-c", 96, 96, 1.588, 0.946, Setting::main},
    {"Electricity", "repeat-c", 96, 192, 1.595, 0.950, Setting::main},
    {"Electricity", "repeat-c", 96, 336, 1.617, 0.961, Setting::main},
    {"Electricity", "repeat-c", 96, 720, 1.647, 0.975, Setting::main},
    {"Exchange-Rate", "repeat-c", 96, 96, 0.081, 0.196, Setting::main},
    {"Exchange-Rate", "repeat-c", 96, 192, 0.167, 0.289, Setting::main},
    {"Exchange-Rate", "repeat-c", 96, 336, 0.305, 0.396, Setting::main},
    {"Exchange-Rate", "repeat-c", 96, 720, 0.823, 0.681, Setting::main},
    {"Traffic", "repeat-c", 96, 96, 2.723, 1.079, Setting::main},
    {"Traffic", "repeat-c", 96, 192, 2.756, 1.087, Setting::main},
    {"Traffic", "repeat-c", 96, 336, 2.791, 1.095, Setting::main},
    {"Traffic", "repeat-c", 96, 720, 2.811, 1.097, Setting::main},
    {"Weather", "repeat-c", 96, 96, 0.259, 0.254, Setting::main},
    {"Weather", "repeat-c", 96, 192, 0.309, 0.292, Setting::main},
    {"Weather", "repeat-c", 96, 336, 0.377, 0.338, Setting::main},
    {"Weather", "repeat-c", 96, 720, 0.465, 0.394, Setting::main},
    {"ILI", "repeat-c", 36, 24, 6.587, 1.701, Setting::main},
    {"ILI", "repeat-c", 36, 36, 7.130, 1.884, Setting::main},
    {"ILI", "repeat-c", 36, 48, 6.575, 1.798, Setting::main},
    {"ILI", "repeat-c", 36, 60, 5.893, 1.677, Setting::main},
    {"ETTh1", "dlinear-s", 96, 96, 0.386, 0.400, Setting::main},
    {"ETTh1", "fedformer", 96, 96, 0.376, 0.419, Setting::main},
    {"ETTh1", "autoformer", 96, 96, 0.449, 0.459, Setting::main},
    {"ETTh1", "dlinear-s", 96, 192, 0.437, 0.432, Setting::main},
    {"ETTh1", "fedformer", 96, 192, 0.420, 0.448, Setting::main},
    {"ETTh1", "autoformer", 96, 192, 0.500, 0.482, Setting::main},
    {"ETTh1", "dlinear-s", 96, 336, 0.481, 0.459, Setting::main},
    {"ETTh1", "fedformer", 96, 336, 0.459, 0.465, Setting::main},
    {"ETTh1", "autoformer", 96, 336, 0.521, 0.496, Setting::main},
    {"ETTh1", "dlinear-s", 96, 720, 0.519, 0.516, Setting::main},
    {"ETTh1", "fedformer", 96, 720, 0.506, 0.507, Setting::main},
    {"ETTh1", "autoformer", 96, 720, 0.514, 0.512, Setting::main},
    {"ETTh2", "dlinear-s", 96, 96, 0.295, 0.352, Setting::main},
    {"ETTh2", "fedformer", 96, 96, 0.346, 0.388, Setting::main},
    {"ETTh2", "autoformer", 96, 96, 0.358, 0.397, Setting::main},
    {"ETTh2", "dlinear-s", 96, 192, 0.452, 0.462, Setting::main},
    {"ETTh2", "fedformer", 96, 192, 0.429, 0.439, Setting::main},
    {"ETTh2", "autoformer", 96, 192, 0.456, 0.452, Setting::main},
    {"ETTh2", "dlinear-s", 96, 336, 0.504, 0.490, Setting::main},
    {"ETTh2", "fedformer", 96, 336, 0.496, 0.487, Setting::main},
    {"ETTh2", "autoformer", 96, 336, 0.482, 0.486, Setting::main},
    {"ETTh2", "dlinear-s", 96, 720, 0.577, 0.538, Setting::main},
    {"ETTh2", "fedformer", 96, 720, 0.463, 0.474, Setting::main},
    {"ETTh2", "autoformer", 96, 720, 0.515, 0.511, Setting::main},
    {"ETTm1", "dlinear-s", 96, 96, 0.345, 0.372, Setting::main},
    {"ETTm1", "fedformer", 96, 96, 0.379, 0.419, Setting::main},
    {"ETTm1", "autoformer", 96, 96, 0.505, 0.475, Setting::main},
    {"ETTm1", "dlinear-s", 96, 192, 0.380, 0.389, Setting::main},
    {"ETTm1", "fedformer", 96, 192, 0.426, 0.441, Setting::main},
    {"ETTm1", "autoformer", 96, 192, 0.553, 0.496, Setting::main},
    {"ETTm1", "dlinear-s", 96, 336, 0.413, 0.413, Setting::main},
    {"ETTm1", "fedformer", 96, 336, 0.445, 0.459, Setting::main},
    {"ETTm1", "autoformer", 96, 336, 0.621, 0.537, Setting::main},
    {"ETTm1", "dlinear-s", 96, 720, 0.474, 0.453, Setting::main},
    {"ETTm1", "fedformer", 96, 720, 0.543, 0.490, Setting::main},
    {"ETTm1", "autoformer", 96, 720, 0.671, 0.561, Setting::main},
    {"ETTm2", "dlinear-s", 96, 96, 0.183, 0.273, Setting::main},
    {"ETTm2", "fedformer", 96, 96, 0.203, 0.287, Setting::main},
    {"ETTm2", "autoformer", 96, 96, 0.255, 0.339, Setting::main},
    {"ETTm2", "dlinear-s", 96, 192, 0.260, 0.325, Setting::main},
    {"ETTm2", "fedformer", 96, 192, 0.269, 0.328, Setting::main},
    {"ETTm2", "autoformer", 96, 192, 0.281, 0.340, Setting::main},
    {"ETTm2", "dlinear-s", 96, 336, 0.336, 0.367, Setting::main},
    {"ETTm2", "fedformer", 96, 336, 0.325, 0.366, Setting::main},
    {"ETTm2", "autoformer", 96, 336, 0.339, 0.372, Setting::main},
    {"ETTm2", "dlinear-s", 96, 720, 0.415, 0.423, Setting::main},
    {"ETTm2", "fedformer", 96, 720, 0.421, 0.415, Setting::main},
    {"ETTm2", "autoformer", 96, 720, 0.433, 0.432, Setting::main},
    {"ETTh1", "dlinear-s", 336, 96, 0.375, 0.399, Setting::long_lookback},
    {"ETTh1", "dlinear-i", 336, 96, 0.377, 0.397, Setting::long_lookback},
    {"ETTh1", "dlinear-s", 336, 192, 0.405, 0.416, Setting::long_lookback},
    {"ETTh1", "dlinear-i", 336, 192, 0.413, 0.421, Setting::long_lookback},
    {"ETTh1", "dlinear-s", 336, 336, 0.439, 0.443, Setting::long_lookback},
    {"ETTh1", "dlinear-i", 336, 336, 0.440, 0.439, Setting::long_lookback},
    {"ETTh1", "dlinear-s", 336, 720, 0.472, 0.490, Setting::long_lookback},
    {"ETTh1", "dlinear-i", 336, 720, 0.476, 0.481, Setting::long_lookback},
    {"ETTh2", "dlinear-s", 336, 96, 0.289, 0.353, Setting::long_lookback},
    {"ETTh2", "dlinear-i", 336, 96, 0.438, 0.451, Setting::long_lookback},
    {"ETTh2", "dlinear-s", 336, 192, 0.383, 0.418, Setting::long_lookback},
    {"ETTh2", "dlinear-i", 336, 192, 0.615, 0.517, Setting::long_lookback},
    {"ETTh2", "dlinear-s", 336, 336, 0.448, 0.465, Setting::long_lookback},
    {"ETTh2", "dlinear-i", 336, 336, 0.603, 0.525, Setting::long_lookback},
    {"ETTh2", "dlinear-s", 336, 720, 0.605, 0.551, Setting::long_lookback},
    {"ETTh2", "dlinear-i", 336, 720, 1.082, 0.723, Setting::long_lookback},
    {"ETTm1", "dlinear-s", 336, 96, 0.299, 0.343, Setting::long_lookback},
    {"ETTm1", "dlinear-i", 336, 96, 0.286, 0.334, Setting::long_lookback},
    {"ETTm1", "dlinear-s", 336, 192, 0.335, 0.365, Setting::long_lookback},
    {"ETTm1", "dlinear-i", 336, 192, 0.327, 0.358, Setting::long_lookback},
    {"ETTm1", "dlinear-s", 336, 336, 0.369, 0.386, Setting::long_lookback},
    {"ETTm1", "dlinear-i", 336, 336, 0.367, 0.383, Setting::long_lookback},
    {"ETTm1", "dlinear-s", 336, 720, 0.425, 0.421, Setting::long_lookback},
    {"ETTm1", "dlinear-i", 336, 720, 0.429, 0.418, Setting::long_lookback},
    {"ETTm2", "dlinear-s", 336, 96, 0.167, 0.260, Setting::long_lookback},
    {"ETTm2", "dlinear-i", 336, 96, 0.195, 0.288, Setting::long_lookback},
    {"ETTm2", "dlinear-s", 336, 192, 0.224, 0.303, Setting::long_lookback},
    {"ETTm2", "dlinear-i", 336, 192, 0.332, 0.367, Setting::long_lookback},
    {"ETTm2", "dlinear-s", 336, 336, 0.281, 0.342, Setting::long_lookback},
    {"ETTm2", "dlinear-i", 336, 336, 0.545, 0.476, Setting::long_lookback},
    {"ETTm2", "dlinear-s", 336, 720, 0.397, 0.421, Setting::long_lookback},
    {"ETTm2", "dlinear-i", 336, 720, 0.697, 0.546, Setting::long_lookback},
    {"Electricity", "dlinear-s", 336, 96, 0.140, 0.237, Setting::long_lookback},
    {"Electricity", "dlinear-i", 336, 96, 0.133, 0.230, Setting::long_lookback},
    {"Electricity", "dlinear-s", 336, 192, 0.153, 0.249, Setting::long_lookback},
    {"Electricity", "dlinear-i", 336, 192, 0.148, 0.245, Setting::long_lookback},
    {"Electricity", "dlinear-s", 336, 336, 0.169, 0.267, Setting::long_lookback},
    {"Electricity", "dlinear-i", 336, 336, 0.164, 0.263, Setting::long_lookback},
    {"Electricity", "dlinear-s", 336, 720, 0.203, 0.301, Setting::long_lookback},
    {"Electricity", "dlinear-i", 336, 720, 0.201, 0.297, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-s", 336, 96, 0.081, 0.203, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-i", 336, 96, 0.091, 0.220, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-s", 336, 192, 0.157, 0.293, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-i", 336, 192, 0.184, 0.323, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-s", 336, 336, 0.305, 0.414, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-i", 336, 336, 0.328, 0.436, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-s", 336, 720, 0.643, 0.601, Setting::long_lookback},
    {"Exchange-Rate", "dlinear-i", 336, 720, 0.975, 0.781, Setting::long_lookback},
    {"Traffic", "dlinear-s", 336, 96, 0.410, 0.282, Setting::long_lookback},
    {"Traffic", "dlinear-i", 336, 96, 0.440, 0.308, Setting::long_lookback},
    {"Traffic", "dlinear-s", 336, 192, 0.423, 0.287, Setting::long_lookback},
    {"Traffic", "dlinear-i", 336, 192, 0.451, 0.314, Setting::long_lookback},
    {"Traffic", "dlinear-s", 336, 336, 0.436, 0.296, Setting::long_lookback},
    {"Traffic", "dlinear-i", 336, 336, 0.464, 0.321, Setting::long_lookback},
    {"Traffic", "dlinear-s", 336, 720, 0.466, 0.315, Setting::long_lookback},
    {"Traffic", "dlinear-i", 336, 720, 0.494, 0.340, Setting::long_lookback},
    {"Weather", "dlinear-s", 336, 96, 0.176, 0.237, Setting::long_lookback},
    {"Weather", "dlinear-i", 336, 96, 0.146, 0.213, Setting::long_lookback},
    {"Weather", "dlinear-s", 336, 192, 0.220, 0.282, Setting::long_lookback},
    {"Weather", "dlinear-i", 336, 192, 0.191, 0.258, Setting::long_lookback},
    {"Weather", "dlinear-s", 336, 336, 0.265, 0.319, Setting::long_lookback},
    {"Weather", "dlinear-i", 336, 336, 0.244, 0.301, Setting::long_lookback},
    {"Weather", "dlinear-s", 336, 720, 0.323, 0.362, Setting::long_lookback},
    {"Weather", "dlinear-i", 336, 720, 0.317, 0.359, Setting::long_lookback},
    {"ETTh1", "linear", 96, 96, 0.434, kNoValue, Setting::ablation},
    {"ETTh2", "linear", 96, 96, 0.314, kNoValue, Setting::ablation},
    {"ETTm1", "linear", 96, 96, 0.354, kNoValue, Setting::ablation},
    {"ETTm2", "linear", 96, 96, 0.189, kNoValue, Setting::ablation},
    {"Exchange-Rate", "linear", 96, 96, 0.080, kNoValue, Setting::ablation},
    {"Electricity", "linear", 96, 96, 0.195, kNoValue, Setting::ablation},
    {"Traffic", "linear", 96, 96, 0.649, kNoValue, Setting::ablation},
    {"Weather", "linear", 96, 96, 0.199, kNoValue, Setting::ablation},
    {"ILI", "linear", 36, 24, 2.655, kNoValue, Setting::ablation},
    {"ETTh1", "linear", 96, 192, 0.490, kNoValue, Setting::ablation},
    {"ETTh2", "linear", 96, 192, 0.458, kNoValue, Setting::ablation},
    {"ETTm1", "linear", 96, 192, 0.423, kNoValue, Setting::ablation},
    {"ETTm2", "linear", 96, 192, 0.256, kNoValue, Setting::ablation},
    {"Exchange-Rate", "linear", 96, 192, 0.168, kNoValue, Setting::ablation},
    {"Electricity", "linear", 96, 192, 0.194, kNoValue, Setting::ablation},
    {"Traffic", "linear", 96, 192, 0.598, kNoValue, Setting::ablation},
    {"Weather", "linear", 96, 192, 0.239, kNoValue, Setting::ablation},
    {"ILI", "linear", 36, 36, 2.702, kNoValue, Setting::ablation},
    {"ETTh1", "linear", 96, 336, 0.529, kNoValue, Setting::ablation},
    {"ETTh2", "linear", 96, 336, 0.516, kNoValue, Setting::ablation},
    {"ETTm1", "linear", 96, 336, 0.486, kNoValue, Setting::ablation},
    {"ETTm2", "linear", 96, 336, 0.346, kNoValue, Setting::ablation},
    {"Exchange-Rate", "linear", 96, 336, 0.271, kNoValue, Setting::ablation},
    {"Electricity", "linear", 96, 336, 0.207, kNoValue, Setting::ablation},
    {"Traffic", "linear", 96, 336, 0.605, kNoValue, Setting::ablation},
    {"Weather", "linear", 96, 336, 0.282, kNoValue, Setting::ablation},
    {"ILI", "linear", 36, 48, 2.684, kNoValue, Setting::ablation},
    {"ETTh1", "linear", 96, 720, 0.647, kNoValue, Setting::ablation},
    {"ETTh2", "linear", 96, 720, 0.705, kNoValue, Setting::ablation},
    {"ETTm1", "linear", 96, 720, 0.547, kNoValue, Setting::ablation},
    {"ETTm2", "linear", 96, 720, 0.674, kNoValue, Setting::ablation},
    {"Exchange-Rate", "linear", 96, 720, 0.603, kNoValue, Setting::ablation},
    {"Electricity", "linear", 96, 720, 0.242, kNoValue, Setting::ablation},
    {"Traffic", "linear", 96, 720, 0.645, kNoValue, Setting::ablation},
    {"Weather", "linear", 96, 720, 0.348, kNoValue, Setting::ablation},
    {"ILI", "linear", 36, 60, 2.627, kNoValue, Setting::ablation},
});

std::string fmt3(double v) {
	if (std::isnan(v)) {
		return "-";
	}
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.3f", v);
	return buf;
}

std::string_view setting_label(Setting s) {
	switch (s) {
	case Setting::main:
		return "benchmark";
	case Setting::long_lookback:
		return "long look-back";
	case Setting::ablation:
		return "decomposition ablation";
	}
	return "";
}

} // namespace

std::span<const PublishedResult> published_results() {
	return kPublished;
}

std::optional<PublishedResult> find_published(std::string_view dataset, std::string_view model, std::size_t lookback,
                                              std::size_t horizon) {
	for (const auto &r : kPublished) {
		if (r.dataset == dataset && r.model == model && r.lookback == lookback && r.horizon == horizon) {
			return r;
		}
	}
	return std::nullopt;
}

std::string render_comparison(std::span<const metrics::EvalSummary> summaries) {
	std::ostringstream out;
	out << "| dataset | model | L | T | MSE | MAE | published model | published L | published MSE | published MAE | "
	       "published setting |\n";
	out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
	bool mixed_lookback = false;
	for (const auto &s : summaries) {
		std::vector<PublishedResult> refs;
		if (auto own = find_published(s.dataset_id, s.model_id, s.L, s.T)) {
			refs.push_back(*own);
		}
		for (const auto &r : kPublished) {
			if (r.dataset == s.dataset_id && r.horizon == s.T && r.setting == Setting::main &&
			    (r.model == "fedformer" || r.model == "autoformer")) {
				refs.push_back(r);
			}
		}
		const std::string head = "| " + s.dataset_id + " | " + s.model_id + " | " + std::to_string(s.L) + " | " +
		                         std::to_string(s.T) + " | " + fmt3(s.mse) + " | " + fmt3(s.mae) + " | ";
		if (refs.empty()) {
			out << head << "- | - | - | - | - |\n";
			continue;
		}
		for (const auto &r : refs) {
			mixed_lookback = mixed_lookback || r.lookback != s.L;
			out << head << r.model << " | " << r.lookback << " | " << fmt3(r.mse) << " | " << fmt3(r.mae) << " | "
			    << setting_label(r.setting) << " |\n";
		}
	}
	out << "\nPublished columns are constants copied from the original publication, not measured here.\n";
	if (mixed_lookback) {
		out << "Note: transformer reference rows are reported at their best look-back (96), which can differ from "
		       "the measured row's L.\n";
	}
	return out.str();
}

} // namespace dlinear::reference
