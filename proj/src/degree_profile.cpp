#include "eqdeg/degree_profile.hpp"

#include <algorithm>

namespace eqdeg {

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.degrees = g.degrees();
    if (p.degrees.empty())
        return p;

    std::vector<int> hist(g.order(), 0);
    for (int d : p.degrees)
        ++hist[d];

    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    for (int d = static_cast<int>(hist.size()) - 1; d >= 0; --d) {
        if (hist[d] > 0)
            ++p.distinct_count;
        if (hist[d] >= 2 && !p.beta)
            p.beta = d;
    }
    return p;
}

}  // namespace eqdeg
