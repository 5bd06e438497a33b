#ifndef TALBOTSUM_FIELD_IO_HPP
#define TALBOTSUM_FIELD_IO_HPP

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "talbotsum/talbot.hpp"

namespace talbotsum::io {

// CSV with header "t,x,intensity", one row per raster cell.
void write_carpet_csv(std::ostream& out, const talbot::CarpetRaster& raster);

// Binary PGM (P5), intensity mapped linearly onto [0, maxval]; 8-bit unless
// the max/min-positive dynamic range exceeds 255:1, then 16-bit big-endian.
void write_carpet_pgm(std::ostream& out, const talbot::CarpetRaster& raster);

// CSV with header "t,x,re,im" for field samples along one time slice.
void write_field_slice_csv(std::ostream& out, double t, const std::vector<double>& x,
                           const std::vector<std::complex<double>>& field);

// Opens for writing, throws IoError on failure.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer);

} // namespace talbotsum::io

#endif
