#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "artdisp/grid/network.hpp"

namespace artdisp::grid {

using Complex = std::complex<double>;
using SparseComplex = Eigen::SparseMatrix<Complex, Eigen::ColMajor, int>;

/// Bus admittance matrix in case bus order. Stored sparse; dense() gives the
/// full n x n view.
struct AdmittanceMatrix {
    std::vector<int> bus_ids;
    SparseComplex entries;

    std::size_t size() const { return bus_ids.size(); }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries.coeff(static_cast<int>(row), static_cast<int>(col));
    }
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(entries); }
};

/// Two-port admittances of one branch: I_from = ff*V_from + ft*V_to,
/// I_to = tf*V_from + tt*V_to.
struct BranchAdmittance {
    Complex ff, ft, tf, tt;
};

BranchAdmittance branch_admittance(const Branch& br);

/// Does not validate the case; out-of-service branches contribute nothing.
AdmittanceMatrix build_ybus(const NetworkCase& c);

}  // namespace artdisp::grid
