#pragma once

#include "state_space.hpp"

namespace mrac {

// Scratch vectors for one classic RK4 step; reused across steps so the
// integration loop does not allocate.
struct Rk4Workspace {
    VectorXd k1, k2, k3, k4, tmp;
    void resize(Eigen::Index n) {
        k1.resize(n);
        k2.resize(n);
        k3.resize(n);
        k4.resize(n);
        tmp.resize(n);
    }
};

// Stages 2-4 and the update of a classic RK4 step, assuming ws.k1 already
// holds f(t, s). Lets a caller reuse the stage-1 evaluation for logging.
template <typename F>
void rk4_finish_step(F&& f, double t, double dt, VectorXd& s, Rk4Workspace& ws) {
    ws.tmp = s + (0.5 * dt) * ws.k1;
    f(t + 0.5 * dt, ws.tmp, ws.k2);
    ws.tmp = s + (0.5 * dt) * ws.k2;
    f(t + 0.5 * dt, ws.tmp, ws.k3);
    ws.tmp = s + dt * ws.k3;
    f(t + dt, ws.tmp, ws.k4);
    s += (dt / 6.0) * (ws.k1 + 2.0 * ws.k2 + 2.0 * ws.k3 + ws.k4);
}

// One classic fixed-step RK4 step advancing s from t to t + dt.
// f(t, s, ds) writes the derivative of s into ds.
template <typename F>
void rk4_step(F&& f, double t, double dt, VectorXd& s, Rk4Workspace& ws) {
    f(t, s, ws.k1);
    rk4_finish_step(f, t, dt, s, ws);
}

}  // namespace mrac
