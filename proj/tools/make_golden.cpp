// Development-only generator for tests/data/golden_rotating_t10.csv.
// Evolves the packet per mode with the adaptive Runge-Kutta oracle
// (mode_oracle), never with the closed-form propagator, so the stored
// snapshot is an independent reference for the propagator pipeline.
#include <cstdio>

#include "floquet/csv.hpp"
#include "floquet/evolution.hpp"

using namespace floquet;

int main() {
    const MassModel model = MassModel::rotating(1.0, 1.0);
    const Wavepacket packet{Envelope::Bump, 2.0, 0.0, Vec2c{complexd{1.0, 0.0}, {}}};
    const SpectralGrid grid{4.0, 512};
    const double t_end = 10.0;

    SpectralField f = make_wavepacket(packet, grid);
    for (std::size_t j = 0; j < grid.n; ++j)
        f.values[j] = mode_oracle(model, grid.xi(j), t_end) * f.values[j];
    const PhysicalField phys = to_physical(f);

    CsvTable t;
    t.header = {"x", "re_a1", "im_a1", "re_a2", "im_a2"};
    for (std::size_t k = 0; k < phys.values.size(); ++k) {
        const Vec2c& v = phys.values[k];
        t.add_row({phys.x(k), v.a.real(), v.a.imag(), v.b.real(), v.b.imag()});
    }
    t.footers.push_back("generator: adaptive RK (mode_oracle), tol 1e-11");
    t.footers.push_back("model=rotating m=1 drive=1 time=10 envelope=bump delta=2 xi-center=0 "
                        "w=(1,0) xi-extent=4 grid-n=512");
    t.write_file("tests/data/golden_rotating_t10.csv");
    std::printf("wrote tests/data/golden_rotating_t10.csv (%zu rows)\n", t.rows.size());
    return 0;
}
