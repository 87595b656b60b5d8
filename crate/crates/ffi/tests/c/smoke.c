#include "hopfgs.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    HopfgsEngine *engine = hopfgs_engine_new();
    const char *argv[] = {"cohomology", "psl2", "--q", "2"};
    char *report = NULL;
    HopfgsStatus s = hopfgs_run(engine, argv, 4, &report);
    if (s != HOPFGS_STATUS_OK || report == NULL || strstr(report, "\"homology\"") == NULL) {
        fprintf(stderr, "run failed: %d\n", (int)s);
        return 1;
    }
    hopfgs_string_free(report);

    const char *bad[] = {"cohomology", "sl2", "--q", "0"};
    s = hopfgs_run(engine, bad, 4, &report);
    const char *msg = hopfgs_last_error();
    if (s != HOPFGS_STATUS_INVALID_INPUT || report != NULL || msg == NULL) {
        fprintf(stderr, "expected invalid input, got %d\n", (int)s);
        return 1;
    }
    printf("%s\n", msg);
    hopfgs_engine_free(engine);
    printf("version %s\n", hopfgs_version());
    return 0;
}
