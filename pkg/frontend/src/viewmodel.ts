// Pure view logic, kept out of the DOM layer so it is trivially testable.

import type { ArticleRecord, CategorizationResult, ConceptTreeNode, InstanceRecord } from "./types.js";

export interface InstanceButtons {
  web: string | null;
  twitter: string | null;
}

export interface InstanceViewModel {
  id: string;
  name: string;
  conceptId: string;
  country: string | null;
  buttons: InstanceButtons;
}

/** A Web button appears iff webAddress is present; Twitter likewise. */
export function instanceViewModel(record: InstanceRecord): InstanceViewModel {
  const attrs = record.attributes;
  return {
    id: record.id,
    name: attrs.labelEN ?? attrs.label ?? record.id,
    conceptId: record.conceptId,
    country: attrs.country ?? null,
    buttons: {
      web: attrs.webAddress ?? null,
      twitter: normalizeTwitter(attrs.twitterAccount),
    },
  };
}

function normalizeTwitter(value: string | undefined): string | null {
  if (!value) return null;
  if (value.startsWith("http://") || value.startsWith("https://")) return value;
  return `https://twitter.com/${value.replace(/^@/, "")}`;
}

export function rootIds(nodes: ConceptTreeNode[]): string[] {
  return nodes.map((node) => node.id);
}

export function leafIds(node: ConceptTreeNode): string[] {
  if (node.children.length === 0) return [node.id];
  return node.children.flatMap(leafIds);
}

export function findNode(nodes: ConceptTreeNode[], id: string): ConceptTreeNode | null {
  for (const node of nodes) {
    if (node.id === id) return node;
    const inChild = findNode(node.children, id);
    if (inChild) return inChild;
  }
  return null;
}

export function pageCount(total: number, limit: number): number {
  if (limit <= 0) throw new Error(`limit must be > 0, got ${limit}`);
  return Math.ceil(total / limit);
}

export function pageLabel(offset: number, limit: number, total: number): string {
  if (total === 0) return "0 of 0";
  const first = offset + 1;
  const last = Math.min(offset + limit, total);
  return `${first}-${last} of ${total}`;
}

export function hasPrevious(offset: number): boolean {
  return offset > 0;
}

export function hasNext(offset: number, limit: number, total: number): boolean {
  return offset + limit < total;
}

export function verdictText(result: CategorizationResult): string {
  return result.relevant ? "relevant to wind energy" : "not relevant to wind energy";
}

export function scoreSummary(result: CategorizationResult): string {
  return `score ${formatWeight(result.score)} vs threshold ${formatWeight(result.threshold)}`;
}

export function formatWeight(value: number): string {
  return Number.isInteger(value) ? value.toFixed(1) : String(Math.round(value * 1e6) / 1e6);
}

export function articleLink(record: ArticleRecord): { text: string; url: string | null } {
  return { text: record.title || record.documentId, url: record.sourceUrl };
}

export function parseKeywords(raw: string): string[] {
  return raw
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
}
