#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdeform/bialgebroid.hpp"
#include "tdeform/deform.hpp"
#include "tdeform/matrix.hpp"

namespace tdeform {

/// Presentation-file error with a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, int col, const std::string& what);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

using Point = std::vector<std::complex<double>>;
using PointSampler = std::function<Point(std::mt19937_64&)>;

struct NamedMatrix {
    char algebra = 'A';  ///< 'A', 'H' or 'B'
    PolyMatrix value;
};

/// A loaded example: undeformed and deformed presentations, structure tables and named data.
struct CatalogEntry {
    std::string name;
    std::string family;  ///< "su2", "so-theta" or "custom"
    int n = 0;
    DeformationContext ctx;
    Rational theta_scale = 1;  ///< numeric q_jk = exp(i pi t theta_scale) at parameter t
    std::string frame;         ///< matrix X with V = X (x). X-dagger
    std::size_t completion_degree = 0;

    std::unique_ptr<Presentation> A0, H0, B0;  ///< undeformed, completed
    std::unique_ptr<Presentation> A, H, B;     ///< deformed
    std::unique_ptr<HopfAlgebra> hopf;
    std::unique_ptr<HopfAlgebra> hopf_total;  ///< optional Hopf structure on A itself
    std::unique_ptr<ComoduleAlgebra> comodule;
    std::unique_ptr<TranslationTable> translation;
    std::unique_ptr<Bialgebroid> bialgebroid;

    std::map<std::string, NCPoly> base;  ///< named base elements inside A
    std::vector<std::string> base_order;
    std::map<std::string, NamedMatrix> matrices;
    std::vector<std::string> notes;
    std::string source_text;

    /// Numeric values of the phase units at parameter t.
    ThetaMatrix numeric_theta(const Rational& t) const;
    const Presentation* algebra(char tag) const;
    const PolyMatrix& matrix(const std::string& name) const;
    bool has_matrix(const std::string& name) const { return matrices.count(name) > 0; }
    std::vector<NCPoly> base_generators() const;
    /// Samplers for points of the undeformed varieties; empty when the family is unknown.
    PointSampler sampler(const Presentation* p) const;
};

/// Parse a presentation file, complete the undeformed relations, deform, and build all tables.
std::unique_ptr<CatalogEntry> load_entry(const std::string& text, const std::string& source = "<text>");
std::unique_ptr<CatalogEntry> load_entry_file(const std::string& path);
std::string export_entry(const CatalogEntry& e);

std::string su2_bundle_text();
std::string so_theta_text(int n);
std::unique_ptr<CatalogEntry> build_su2_bundle();
std::unique_ptr<CatalogEntry> build_so_theta(int n);
/// The standalone four-sphere with deg zeta1 = (1,0), deg zeta2 = (0,1).
std::unique_ptr<Presentation> build_s4_theta(const DeformationContext& ctx);

}  // namespace tdeform
