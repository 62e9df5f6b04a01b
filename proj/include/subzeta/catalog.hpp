#pragma once

#include "subzeta/algebras.hpp"
#include "subzeta/partition.hpp"

#include <string>
#include <vector>

namespace subzeta {

EndoSetup heisenberg();
EndoSetup fil4();
EndoSetup g66();
EndoSetup abelian(int n);
// Basis x0 then x_ij ordered by level c - lambda_i + j.
EndoSetup l_lambda(const Partition& lambda);
EndoSetup maximal_class(int c);
EndoSetup grenham(int r);
EndoSetup m_f(const Partition& f);
EndoSetup u_lambda(const Partition& lambda);
EndoSetup free_nilpotent(int c, int d);

// Names: heisenberg, fil4, g66, abelian:n, l:3,2, maximal:c, grenham:r, mf:2,1, u:3,1, free:c,d.
// Throws UnknownNameError or InvalidPartitionError.
EndoSetup lookup(const std::string& name);

struct CatalogEntry {
    std::string name;
    std::string description;
};
std::vector<CatalogEntry> catalog_entries();

}  // namespace subzeta
