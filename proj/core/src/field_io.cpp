#include "talbotsum/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>

#include "talbotsum/errors.hpp"

namespace talbotsum::io {

void write_carpet_csv(std::ostream& out, const talbot::CarpetRaster& raster) {
    out << "t,x,intensity\n";
    out.precision(12);
    for (std::size_t i = 0; i < raster.t_axis.size(); ++i)
        for (std::size_t j = 0; j < raster.x_axis.size(); ++j)
            out << raster.t_axis[i] << ',' << raster.x_axis[j] << ',' << raster.at(i, j) << '\n';
    if (!out) throw IoError("carpet csv: write failed");
}

void write_carpet_pgm(std::ostream& out, const talbot::CarpetRaster& raster) {
    double max_i = 0.0;
    double min_pos = std::numeric_limits<double>::infinity();
    for (double v : raster.intensity) {
        max_i = std::max(max_i, v);
        if (v > 0.0) min_pos = std::min(min_pos, v);
    }
    const bool wide = max_i > 0.0 && std::isfinite(min_pos) && max_i / min_pos > 255.0;
    const unsigned maxval = wide ? 65535u : 255u;
    const std::size_t W = raster.x_axis.size();
    const std::size_t H = raster.t_axis.size();
    out << "P5\n" << W << ' ' << H << '\n' << maxval << '\n';
    for (std::size_t i = 0; i < H; ++i) {
        for (std::size_t j = 0; j < W; ++j) {
            const double s = max_i > 0.0 ? raster.at(i, j) / max_i : 0.0;
            const unsigned v = static_cast<unsigned>(std::lround(s * maxval));
            if (wide) {
                out.put(static_cast<char>((v >> 8) & 0xff));
                out.put(static_cast<char>(v & 0xff));
            } else {
                out.put(static_cast<char>(v & 0xff));
            }
        }
    }
    if (!out) throw IoError("carpet pgm: write failed");
}

void write_field_slice_csv(std::ostream& out, double t, const std::vector<double>& x,
                           const std::vector<std::complex<double>>& field) {
    if (x.size() != field.size()) throw ParameterError("field csv: size mismatch");
    out << "t,x,re,im\n";
    out.precision(17);
    for (std::size_t j = 0; j < x.size(); ++j)
        out << t << ',' << x[j] << ',' << field[j].real() << ',' << field[j].imag() << '\n';
    if (!out) throw IoError("field csv: write failed");
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    writer(out);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

} // namespace talbotsum::io
