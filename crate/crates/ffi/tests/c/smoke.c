#include <stdio.h>
#include <string.h>
#include "polydual.h"

#define CHECK(cond)                                            \
    do {                                                       \
        if (!(cond)) {                                         \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, \
                    #cond);                                    \
            return 1;                                          \
        }                                                      \
    } while (0)

int main(void) {
    const int64_t weights[4] = {2, 3, 7, 9};
    PdPolytope *w = NULL;
    CHECK(pd_polytope_from_weights(weights, &w) == PD_STATUS_OK);
    CHECK(pd_polytope_vertex_count(w) == 6);

    bool reflexive = false;
    CHECK(pd_polytope_is_reflexive(w, &reflexive) == PD_STATUS_OK && reflexive);

    size_t points = 0;
    CHECK(pd_polytope_lattice_point_count(w, &points) == PD_STATUS_OK && points == 14);

    PdPolytope *f = NULL;
    CHECK(pd_polytope_from_newton("X^4Z+Y^3+XZ^2+W^6Z+W^7Y", weights, &f) == PD_STATUS_OK);
    CHECK(pd_polytope_is_reflexive(f, &reflexive) == PD_STATUS_OK && !reflexive);
    PdPolytope *bad = NULL;
    CHECK(pd_polytope_dual(f, &bad) == PD_STATUS_NOT_INTEGRAL && bad == NULL);
    CHECK(strlen(pd_last_error()) > 0);

    char *json = NULL;
    CHECK(pd_verify_case("S16", &json) == PD_STATUS_OK);
    CHECK(strstr(json, "\"no duality\"") != NULL);
    pd_string_free(json);

    pd_polytope_free(f);
    pd_polytope_free(w);
    printf("ok\n");
    return 0;
}
