/* compile-only check that the public header is valid C */
#include "qar.h"

int qar_header_compiles(void) {
    qar_report* rep = (qar_report*)0;
    (void)rep;
    return QAR_OK;
}
