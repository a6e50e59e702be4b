#pragma once

// Regenerates the data behind the paper-style figures from the algebraic
// predicates: 2D sign masks, the 3D equality surface, 3D voxel splits and
// the 1D curve comparison. Cells are sampled at their centers so predicates
// are never evaluated exactly on the measure-zero boundary manifolds (except
// when a center happens to land there, which is then labeled as boundary).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinebound/bounds.hpp"
#include "sinebound/format.hpp"

namespace sinebound {

enum class FigureId { Fig1, Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Fig8 };

inline std::string_view to_string(FigureId f) {
  switch (f) {
    case FigureId::Fig1: return "Fig1";
    case FigureId::Fig2: return "Fig2";
    case FigureId::Fig3: return "Fig3";
    case FigureId::Fig4: return "Fig4";
    case FigureId::Fig5: return "Fig5";
    case FigureId::Fig6: return "Fig6";
    case FigureId::Fig7: return "Fig7";
    case FigureId::Fig8: return "Fig8";
  }
  return "?";
}

inline std::optional<FigureId> figure_from_string(std::string_view s) {
  for (FigureId f : {FigureId::Fig1, FigureId::Fig2, FigureId::Fig3,
                     FigureId::Fig4, FigureId::Fig5, FigureId::Fig6,
                     FigureId::Fig7, FigureId::Fig8})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

/// Raster of region labels, a heightfield, or sampled curves.
///
/// Mask grids store one small-integer label per cell; sign masks use
/// 0 = negative, 1 = boundary (exact zero), 2 = positive, and the voxel
/// splits use 0 = outside, 1 = first region, 2 = second region. Cell (i,j)
/// of an N-cell axis is centered at (i + 0.5)/N; storage is row-major with
/// the x index fastest (index = (iz*N + iy)*N + ix in 3D, iy*N + ix in 2D).
struct LabelGrid {
  enum class Kind { Mask2D, Mask3D, Height2D, Curves1D };

  FigureId figure{};
  Kind kind{};
  int dims = 2;
  int resolution = 0;
  std::vector<std::uint8_t> labels;  // masks
  std::vector<double> values;        // heightfield, or 3 curve values per row
  std::vector<std::uint8_t> aux;     // Fig1 only: which bound is smaller

  std::size_t cell_count() const {
    std::size_t n = static_cast<std::size_t>(resolution);
    std::size_t c = n;
    for (int d = 1; d < dims; ++d) c *= n;
    return c;
  }
};

namespace detail {

inline std::uint8_t sign_label(double v) {
  if (v < 0.0) return 0;
  if (v > 0.0) return 2;
  return 1;
}

inline double fig2_height(double x, double y) {
  if (y == 0.5) return std::numeric_limits<double>::quiet_NaN();
  double z = y * (2.0 * x - 1.0) / (1.0 - 2.0 * y);
  if (z < 0.0) return 0.0;
  if (z > 1.0) return 1.0;
  return z;
}

inline double fig_delta(double x, double y, double z) {
  return y * (1.0 - 2.0 * x) + z * (1.0 - 2.0 * y);
}

}  // namespace detail

inline LabelGrid render(FigureId figure, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("render: resolution must be >= 2");
  LabelGrid g;
  g.figure = figure;
  g.resolution = resolution;
  std::size_t n = static_cast<std::size_t>(resolution);
  auto center = [&](std::size_t i) {
    return (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
  };

  switch (figure) {
    case FigureId::Fig1: {
      g.kind = LabelGrid::Kind::Mask2D;
      g.dims = 2;
      g.labels.resize(n * n);
      g.aux.resize(n * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          double x = center(i), y = center(j);
          g.labels[j * n + i] = detail::sign_label((x - 0.5) * (y - 0.5));
          double pxy[2] = {x, y};
          double la = detail::bound_log(BoundForm::A2, pxy, 2);
          double lb = detail::bound_log(BoundForm::B2, pxy, 2);
          g.aux[j * n + i] = la < lb ? 0 : (lb < la ? 2 : 1);
        }
      return g;
    }
    case FigureId::Fig5:
    case FigureId::Fig6:
    case FigureId::Fig7: {
      g.kind = LabelGrid::Kind::Mask2D;
      g.dims = 2;
      g.labels.resize(n * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          double x = center(i), y = center(j);
          double p = 0.0;
          if (figure == FigureId::Fig5)
            p = (x - 0.5) * (y - 0.5);
          else if (figure == FigureId::Fig6)
            p = (x + y - 1.0) * (2.0 * y - 1.0);
          else
            p = (4.0 * x * y - x - y) * (2.0 * x - 1.0);
          g.labels[j * n + i] = detail::sign_label(p);
        }
      return g;
    }
    case FigureId::Fig2: {
      g.kind = LabelGrid::Kind::Height2D;
      g.dims = 2;
      g.values.resize(n * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          g.values[j * n + i] = detail::fig2_height(center(i), center(j));
      return g;
    }
    case FigureId::Fig3:
    case FigureId::Fig4: {
      g.kind = LabelGrid::Kind::Mask3D;
      g.dims = 3;
      g.labels.resize(n * n * n);
      bool positive = figure == FigureId::Fig3;
      for (std::size_t kz = 0; kz < n; ++kz)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i) {
            double x = center(i), y = center(j), z = center(kz);
            double crit = detail::fig_delta(x, y, z) * (2.0 * z - 1.0);
            bool in = positive ? crit > 0.0 : crit < 0.0;
            std::uint8_t label = 0;
            if (in) label = z < 0.5 ? 1 : 2;
            g.labels[(kz * n + j) * n + i] = label;
          }
      return g;
    }
    case FigureId::Fig8: {
      g.kind = LabelGrid::Kind::Curves1D;
      g.dims = 1;
      g.values.resize(n * 3);
      for (std::size_t i = 0; i < n; ++i) {
        double x = center(i);
        g.values[i * 3 + 0] = std::sin(2.0 * kPi * x * (1.0 - x));
        g.values[i * 3 + 1] = std::sin(kPi * (1.0 + x) / 3.0);
        g.values[i * 3 + 2] = std::sin(kPi * (1.0 + 2.0 * x) / 3.0);
      }
      return g;
    }
  }
  throw std::logic_error("render: unhandled figure");
}

enum class EmitFormat { CSV, PGM, SVG };

inline std::optional<EmitFormat> emit_format_from_string(std::string_view s) {
  if (s == "csv") return EmitFormat::CSV;
  if (s == "pgm") return EmitFormat::PGM;
  if (s == "svg") return EmitFormat::SVG;
  return std::nullopt;
}

namespace detail {

inline const char* pgm_comment(FigureId f) {
  switch (f) {
    case FigureId::Fig1:
    case FigureId::Fig5:
    case FigureId::Fig6:
    case FigureId::Fig7:
      return "labels: 0=predicate negative, 1=boundary, 2=predicate positive";
    case FigureId::Fig3:
    case FigureId::Fig4:
      return "labels: 0=outside, 1=region with z<1/2, 2=region with z>1/2";
    default:
      return "labels";
  }
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
  if (!os) throw std::runtime_error("write failed: " + path);
}

inline std::string slice_path(const std::string& path, std::size_t iz) {
  char suffix[32];
  std::snprintf(suffix, sizeof suffix, "_z%03u",
                static_cast<unsigned>(iz));
  std::size_t dot = path.rfind('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

inline std::string pgm_2d(const LabelGrid& g, const std::uint8_t* labels,
                          const std::string& extra_comment) {
  std::size_t n = static_cast<std::size_t>(g.resolution);
  std::string out = "P2\n# " + std::string(pgm_comment(g.figure));
  if (!extra_comment.empty()) out += "; " + extra_comment;
  out += "\n# row 0 is the top of the unit square (highest y)\n";
  out += std::to_string(n) + " " + std::to_string(n) + "\n2\n";
  for (std::size_t row = 0; row < n; ++row) {
    std::size_t j = n - 1 - row;
    for (std::size_t i = 0; i < n; ++i) {
      out += std::to_string(static_cast<int>(labels[j * n + i]));
      out += (i + 1 < n) ? ' ' : '\n';
    }
  }
  return out;
}

}  // namespace detail

/// Write a rendered grid to disk. CSV works for every kind; PGM covers the
/// masks (3D masks become one file per z slice, `name_z###.pgm`); SVG covers
/// 2D masks and the curve plot. Output is byte-deterministic.
inline void emit(const LabelGrid& g, EmitFormat format,
                 const std::string& path) {
  using detail::fmt17;
  std::size_t n = static_cast<std::size_t>(g.resolution);
  auto center = [&](std::size_t i) {
    return (static_cast<double>(i) + 0.5) / static_cast<double>(g.resolution);
  };

  switch (format) {
    case EmitFormat::CSV: {
      std::string out;
      if (g.kind == LabelGrid::Kind::Mask2D) {
        out = "x,y,label\n";
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i)
            out += fmt17(center(i)) + "," + fmt17(center(j)) + "," +
                   std::to_string(static_cast<int>(g.labels[j * n + i])) +
                   "\n";
      } else if (g.kind == LabelGrid::Kind::Mask3D) {
        out = "x,y,z,label\n";
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
              out += fmt17(center(i)) + "," + fmt17(center(j)) + "," +
                     fmt17(center(k)) + "," +
                     std::to_string(
                         static_cast<int>(g.labels[(k * n + j) * n + i])) +
                     "\n";
      } else if (g.kind == LabelGrid::Kind::Height2D) {
        out = "x,y,value\n";
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i)
            out += fmt17(center(i)) + "," + fmt17(center(j)) + "," +
                   fmt17(g.values[j * n + i]) + "\n";
      } else {
        out = "x,sin_2pix_1mx,sin_pi_1px_3,sin_pi_1p2x_3\n";
        for (std::size_t i = 0; i < n; ++i)
          out += fmt17(center(i)) + "," + fmt17(g.values[i * 3 + 0]) + "," +
                 fmt17(g.values[i * 3 + 1]) + "," +
                 fmt17(g.values[i * 3 + 2]) + "\n";
      }
      detail::write_file(path, out);
      return;
    }
    case EmitFormat::PGM: {
      if (g.kind == LabelGrid::Kind::Mask2D) {
        detail::write_file(path, detail::pgm_2d(g, g.labels.data(), ""));
        return;
      }
      if (g.kind == LabelGrid::Kind::Mask3D) {
        for (std::size_t k = 0; k < n; ++k) {
          detail::write_file(
              detail::slice_path(path, k),
              detail::pgm_2d(g, g.labels.data() + k * n * n,
                             "slice z=" + fmt17(center(k))));
        }
        return;
      }
      throw std::invalid_argument("emit: PGM supports mask grids only");
    }
    case EmitFormat::SVG: {
      if (g.kind == LabelGrid::Kind::Mask2D) {
        std::string out =
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
            std::to_string(n) + " " + std::to_string(n) + "\">\n";
        static const char* fills[3] = {"#e8e8e8", "#9c9c9c", "#4a4a4a"};
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i)
            out += "<rect x=\"" + std::to_string(i) + "\" y=\"" +
                   std::to_string(n - 1 - j) +
                   "\" width=\"1\" height=\"1\" fill=\"" +
                   fills[g.labels[j * n + i]] + "\"/>\n";
        out += "</svg>\n";
        detail::write_file(path, out);
        return;
      }
      if (g.kind == LabelGrid::Kind::Curves1D) {
        static const char* strokes[3] = {"#aaaaaa", "#666666", "#000000"};
        std::string out =
            "<svg xmlns=\"http://www.w3.org/2000/svg\" "
            "viewBox=\"0 0 1000 1000\">\n";
        for (int c = 0; c < 3; ++c) {
          out += "<polyline fill=\"none\" stroke=\"";
          out += strokes[c];
          out += "\" points=\"";
          for (std::size_t i = 0; i < n; ++i) {
            double x = center(i) * 1000.0;
            double y = 1000.0 - g.values[i * 3 + c] * 1000.0;
            out += fmt17(x) + "," + fmt17(y);
            if (i + 1 < n) out += " ";
          }
          out += "\"/>\n";
        }
        out += "</svg>\n";
        detail::write_file(path, out);
        return;
      }
      throw std::invalid_argument(
          "emit: SVG supports 2D masks and curves only");
    }
  }
  throw std::logic_error("emit: unhandled format");
}

}  // namespace sinebound
