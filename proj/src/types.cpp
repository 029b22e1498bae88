#include "splat/types.hpp"

namespace splat {

Mat3 shape_matrix(const Gaussian& g) {
    const Mat3 r = quat_to_mat(quat_normalized(g.rotation));
    // M = R S, Sigma = M M^T
    Mat3 m = r;
    for (int i = 0; i < 3; ++i) {
        m.m[i][0] *= std::exp(g.log_scale.x);
        m.m[i][1] *= std::exp(g.log_scale.y);
        m.m[i][2] *= std::exp(g.log_scale.z);
    }
    Mat3 sigma;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sigma.m[i][j] = m.m[i][0] * m.m[j][0] + m.m[i][1] * m.m[j][1] + m.m[i][2] * m.m[j][2];
    return sigma;
}

}  // namespace splat
