// Which result field feeds which sense. At most one field per modality, so
// e.g. temperature can drive color while displacement drives pitch.

export type Modality = "visual" | "audio" | "none";

export class ModalityAssignment {
  private byField: Map<string, Modality>;

  constructor(fieldNames: string[]) {
    this.byField = new Map(fieldNames.map((name) => [name, "none"]));
  }

  get fieldNames(): string[] {
    return [...this.byField.keys()];
  }

  modalityOf(field: string): Modality {
    const modality = this.byField.get(field);
    if (modality === undefined) throw new Error(`unknown field ${field}`);
    return modality;
  }

  /** Field currently driving a modality, or null. */
  fieldFor(modality: Exclude<Modality, "none">): string | null {
    for (const [field, assigned] of this.byField) {
      if (assigned === modality) return field;
    }
    return null;
  }

  /**
   * Assign a field to a modality. The previous holder of that modality (if
   * any) drops back to "none"; a field holds at most one modality.
   */
  assign(field: string, modality: Modality): void {
    if (!this.byField.has(field)) throw new Error(`unknown field ${field}`);
    if (modality !== "none") {
      const holder = this.fieldFor(modality);
      if (holder !== null && holder !== field) this.byField.set(holder, "none");
    }
    this.byField.set(field, modality);
  }
}
